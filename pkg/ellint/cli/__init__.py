from .commands import CommandResult, cmd_compare, cmd_eval, cmd_table, expand_grid, parse_range
from .records import OutputRecord, RecordWriter

__all__ = [
    'CommandResult',
    'OutputRecord',
    'RecordWriter',
    'cmd_compare',
    'cmd_eval',
    'cmd_table',
    'expand_grid',
    'parse_range',
]
