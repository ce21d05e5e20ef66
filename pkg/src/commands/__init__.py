"""Subcommand implementations for the cplab command line."""

from .chsh import cmd_chsh
from .evolve import cmd_evolve
from .generator import cmd_generator
from .oracle import cmd_oracle
from .perturbative import cmd_perturbative
from .tomography import cmd_tomography

COMMANDS = {
    'generator': cmd_generator,
    'evolve': cmd_evolve,
    'chsh': cmd_chsh,
    'tomography': cmd_tomography,
    'oracle': cmd_oracle,
    'perturbative': cmd_perturbative,
}

__all__ = [
    'COMMANDS',
    'cmd_generator',
    'cmd_evolve',
    'cmd_chsh',
    'cmd_tomography',
    'cmd_oracle',
    'cmd_perturbative',
]
