"""Exact invariant theory for coregular spaces whose orbits parametrize genus one curves.

All arithmetic is over the rationals. The submodules are:

- ``exact``: rationals, sparse polynomials, kernels and interpolation
- ``elliptic``: Weierstrass curves and the group law
- ``tensor``: rational tensors, group actions and embeddings
- ``classical``: binary quartics, ternary cubics, (2,2) forms, quadric pencils
- ``deriver``: invariant bases by infinitesimal invariance, plus calibration
- ``rubiks`` and ``hypercube``: the 3x3x3 and 2x2x2x2 spaces
- ``jordan``: cubic Jordan algebras and Hermitian cubes
- ``cli``: the ``genusone`` command line front end
"""

from .errors import *  # noqa: F401,F403
from .exact import *  # noqa: F401,F403
from .elliptic import *  # noqa: F401,F403
from .tensor import *  # noqa: F401,F403
from .classical import *  # noqa: F401,F403
from .deriver import *  # noqa: F401,F403
from .rubiks import *  # noqa: F401,F403
from .hypercube import *  # noqa: F401,F403
from .jordan import *  # noqa: F401,F403

__version__ = "0.1.0"
