"""Quantum spectra of Fano varieties, in exact rational arithmetic.

Builds small quantum cohomology rings (projective spaces, Grassmannians,
isotropic Grassmannians IG(2,2n)), decomposes their spectra along the
anticanonical multiplication, and checks the resulting counts against
Lefschetz exceptional collections, whose Ext vanishing is verified by a
Borel-Weil-Bott backend.
"""

__version__ = "0.1.0"
