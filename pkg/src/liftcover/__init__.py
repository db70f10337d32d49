"""Lifting closed curves on a bouquet of circles to finite covers."""

from liftcover.census import CensusQuery, RminResult, count_index2, enumerate_covers, min_nonlift_degree, nonlift_family_check
from liftcover.cover import CoverGraph, LiftReport, from_json, is_connected, is_normal, lift_check, to_dot, to_json
from liftcover.families import FamilySpec, build_cover, classify_mod3, criterion, parse_family
from liftcover.solver import LemmaCase, SolverResult, enumerate_solutions, find_prime_normal_cover, solve_lemma
from liftcover.words import ExponentVector, FreeWord, block_length, exponent_sums, parse_word

__all__ = [
    "CensusQuery", "CoverGraph", "ExponentVector", "FamilySpec", "FreeWord", "LemmaCase", "LiftReport",
    "RminResult", "SolverResult", "block_length", "build_cover", "classify_mod3", "count_index2", "criterion",
    "enumerate_covers", "enumerate_solutions", "exponent_sums", "find_prime_normal_cover", "from_json",
    "is_connected", "is_normal", "lift_check", "min_nonlift_degree", "nonlift_family_check", "parse_family",
    "parse_word", "solve_lemma", "to_dot", "to_json",
]
