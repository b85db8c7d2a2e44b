"""Workbench for parallel communicating pushdown automata, multi-head PDAs and one-register machines."""
