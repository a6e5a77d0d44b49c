"""Exact computational engine for restricted Lie algebras of classical
groups over prime fields: normaliser towers, radicals, parabolic
subalgebra detection, cocharacter optimization, prime classification and
Harder-Narasimhan slope checks."""

__version__ = "0.1.0"
