"""Toric ideals, extensions of toric varieties, standard bases, tangent
cones and Hilbert functions."""

__version__ = "0.1.0"

from .algebra import Binomial, Polynomial, TermOrder, homogenize, dehomogenize, spoly
from .semigroup import (AffineSemigroup, ExtensionSpec, GluingCertificate, InvalidExtension,
                        check_gluing, delta, Delta, lattice_rank, make_extension, representations)
from .ideals import (BinomialIdeal, GroebnerBasis, buchberger, ideal_equal, minimal_generators,
                     projective_closure_ideal, projective_extension, toric_groebner, toric_ideal)
from .local import (StandardBasis, TangentConeIdeal, extend_standard_basis, leading_ideal,
                    mora_nf, standard_basis, tangent_cone_ideal)
from .hilbert import (HilbertFunction, HilbertSeries, hilbert_function, hilbert_series,
                      is_nondecreasing, verify_product_identity)
from .theorems import (BettiVector, TheoremReport, betti_recurrence, verify_prop_affine,
                       verify_prop_bad, verify_prop_hom, verify_prop_stdbasis_and_cone,
                       verify_thm_hf)
