"""Brute-force verification of the two-character and spread-line claims."""

from .pipelines import verify_bm
from .pipelines import verify_bt
from .report import ClaimFailed
from .report import IntersectionHistogram
from .report import VerificationReport
from .report import render_reports
from .report import write_reports
from .spread_claims import EvenE
from .spread_claims import UnsupportedVariety
from .spread_claims import containment_split
from .spread_claims import count_spread_lines_in
from .spread_claims import gcd_check
from .spread_claims import infinity_section
from .spread_claims import partition_check
from .spread_claims import q1q2q3_audit
from .two_character import CheckpointMismatch
from .two_character import two_character_report
from .two_character import two_character_scan
