"""Named machines and oracles reachable from the command line."""
from .constructions import (
    build_anbn_pcpa,
    build_doubling_sensing_pda,
    build_otto_acceptor,
    build_palindrome_pcpa,
    build_power_of_two_pcpa,
    doubling_program,
    mod3_program,
    parity_program,
)
from .constructions.fixtures import oracle_anbn, oracle_even_palindrome
from .constructions.oracles import ORACLES as _BASE_ORACLES

BUILTINS = {
    "power-of-two-pcpa": build_power_of_two_pcpa,
    "otto-2head": build_otto_acceptor,
    "doubling-2head": build_doubling_sensing_pda,
    "palindrome-pcpa": build_palindrome_pcpa,
    "anbn-pcpa": build_anbn_pcpa,
    "parity-rm": parity_program,
    "doubling-rm": doubling_program,
    "mod3-rm": mod3_program,
}

ORACLES = dict(_BASE_ORACLES)
ORACLES["even-palindrome"] = oracle_even_palindrome
ORACLES["anbn"] = oracle_anbn
