from .doubling import build_doubling_sensing_pda
from .fixtures import (
    accept_only_program,
    build_anbn_pcpa,
    build_palindrome_pcpa,
    doubling_program,
    mod3_program,
    parity_program,
)
from .oracles import ORACLES, oracle_otto, oracle_power_of_two
from .otto import build_otto_acceptor
from .power_of_two import build_power_of_two_pcpa
from .rm_compiler import CompilationMap, compile_rm_to_pcpa

__all__ = [
    "CompilationMap",
    "ORACLES",
    "accept_only_program",
    "build_anbn_pcpa",
    "build_doubling_sensing_pda",
    "build_otto_acceptor",
    "build_palindrome_pcpa",
    "build_power_of_two_pcpa",
    "compile_rm_to_pcpa",
    "doubling_program",
    "mod3_program",
    "oracle_otto",
    "oracle_power_of_two",
    "parity_program",
]

from .sync_compiler import compile_sync_pcpa_to_mhpda  # noqa: E402

__all__.append("compile_sync_pcpa_to_mhpda")
