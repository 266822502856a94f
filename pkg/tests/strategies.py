"""Hypothesis strategies for valid interpolation problems."""
from hypothesis import strategies as st

from khfri.generate import CASE_GENERATORS, random_problem

problems = st.randoms(use_true_random=False).map(random_problem)
case_problems = st.sampled_from(sorted(CASE_GENERATORS)).flatmap(
    lambda name: st.tuples(st.just(name), st.randoms(use_true_random=False).map(CASE_GENERATORS[name]))
)
