from .qhvar_cli import ConfigError
from .qhvar_cli import RunConfig
from .qhvar_cli import get_options
from .qhvar_cli import main
from .qhvar_cli import run
