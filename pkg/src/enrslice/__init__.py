"""Finite categories, bicategories, categories enriched in them, and slicing over an enriched category."""

__version__ = "0.1.0"

from .bicat import (BOOL_AND, Bicategory, BicategoryError, ExplicitBicategory, Fn, SigmaFinSet, chaotic,
                    free_quantaloid, from_monoidal, lax_slice, monoidal_poset, product_bicategory, right_lifting,
                    terminal_bicategory, validate_bicategory)
from .connect import (ColimitPresentation, FinTwoCategory, Verdict, Weight, colimit_presentation,
                      cylinder_category, decide_terminal, delta1, delta1_connected, is_cat_connected,
                      is_connected_setvalued, standard_weights)
from .document import Document, DocumentError, emit, parse
from .enriched import (BCategory, BFunctor, BNatTrans, encode_category, encode_functor, enumerate_bcategories,
                       enumerate_bfunctors, enumerate_bnats, validate_bcategory, validate_bfunctor, validate_bnat)
from .fibration import (cartesian_lift, cross_check, has_singleton_powers, is_cartesian, is_fibration, power,
                        power_by_singleton)
from .fincat import (DISC2, IDEMMON, ONE, PAR, TWO, FinCategory, Functor, NatTransformation, build_category,
                     validate_category)
from .slice import (OplaxLimitCone, SliceBicategory, correspondence_on_maps, from_sliced, oplax_limit,
                    pair_categories, slice_bicategory, to_sliced, unpair)
