
from .base import Graph, ComponentStats, DegreeStats
from . import builtin
from . import analysis
from . import edgelist
