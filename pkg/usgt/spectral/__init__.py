
from .spectrums import Spectrum, SpectrumMultiset
from . import matrices
from . import spectrums
from . import indices
from . import bounds
