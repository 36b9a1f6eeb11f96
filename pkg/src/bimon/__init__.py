"""Executable strict bimonoidal categories with anti-involution.

Instances come from :func:`bimon.instances.make_instance`; law suites live
in :mod:`bimon.core`, :mod:`bimon.involution`, :mod:`bimon.braided`,
:mod:`bimon.matrices` and :mod:`bimon.bar`.
"""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    BimonoidalCategory, CapabilityError, CheckReport, Mor, SampleSpec, check_bimonoidal_laws,
    component_label, enumerate_sample,
)
from .instances import make_instance  # noqa: E402
from .involution import check_anti_involution  # noqa: E402

__all__ = [
    "__version__", "BimonoidalCategory", "CapabilityError", "CheckReport", "Mor", "SampleSpec",
    "check_bimonoidal_laws", "check_anti_involution", "component_label", "enumerate_sample",
    "make_instance",
]
