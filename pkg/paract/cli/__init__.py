from .fixtures import gen_fixture, bernoulli, bernoulli_action, regular_action, subgroup_restriction, trivial
from .suite import run_suite, run_instance, SuiteReport, CHECKS
