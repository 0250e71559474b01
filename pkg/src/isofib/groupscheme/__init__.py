"""Finite group schemes, embeddings into G_a / G_m, and elementary subgroups
of automorphism group schemes of elliptic curves."""

from .spec import (Alpha, Atom, Etale, GroupSchemeSpec, Mu, SSKernel, is_subspec,
                   parse_spec, subspecs)

# the subgroup layer depends on the elliptic package, which itself needs the
# atoms above, so it is loaded on first use
_LAZY = {"ElementarySubgroup", "embeds_in_Ga", "embeds_in_Gm", "fixed_subgroup",
         "fixed_subgroup_table", "all_fixed_rows", "free_on_E", "validate_elementary"}


def __getattr__(name):
    if name in _LAZY:
        from . import subgroups
        return getattr(subgroups, name)
    raise AttributeError(name)


__all__ = ["Alpha", "Atom", "Etale", "GroupSchemeSpec", "Mu", "SSKernel", "is_subspec",
           "parse_spec", "subspecs", *sorted(_LAZY)]
