from .exceptions import *

from .graph import Graph

from .graph6 import parse_graph6, write_graph6

from .patterns import PatternSpec, find_induced, is_free

from .characterize import check, sweep, theorem
