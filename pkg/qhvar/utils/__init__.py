from ._core import PRT_Table
from ._core import TableStyle
from ._core import make_table
from .log_utils import configure_logging
from .log_utils import file_log_handler
from .log_utils import get_log_path
from .log_utils import stream_log_handler
from .memory import ResourceLimit
from .memory import check_available_memory
from .memory import rss_mem
from .misc import atomic_write
from .misc import dictionary_table
