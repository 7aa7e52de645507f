__version__ = '0.1.0'


from paract.core import *

from paract import (
    core,
    orbits,
    globalization,
    tower,
    algebra,
    filetools,
)
