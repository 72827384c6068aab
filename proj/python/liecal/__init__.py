"""Principal sl(2) subalgebras of compact classical Lie algebras, Kostant
decompositions, bi-invariant forms and their numerical verification suites."""

try:
    from ._liecal import *  # wheel layout: extension inside the package
    from ._liecal import __version__
except ImportError:  # build-tree layout: extension next to the package dir
    from _liecal import *
    from _liecal import __version__
