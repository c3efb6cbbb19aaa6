"""Python bindings for the QVision visual-pathway and cortical teleportation model."""

from ._qvision import (
    BellOutcome,
    CellClass,
    ConfigError,
    Eye,
    GateKind,
    Hemiretina,
    IoError,
    Qubit,
    Rng,
    cgmp_hydrolysis_rate,
    decode_potential,
    fidelity,
    gao_distinguish,
    gate_eval,
    glutamate_release,
    make_epr,
    membrane_potential,
    precode,
    random_qubit,
    route_fiber,
    run_echo,
    run_scenario,
    teleport,
    transfer,
)

__all__ = [
    "BellOutcome",
    "CellClass",
    "ConfigError",
    "Eye",
    "GateKind",
    "Hemiretina",
    "IoError",
    "Qubit",
    "Rng",
    "cgmp_hydrolysis_rate",
    "decode_potential",
    "fidelity",
    "gao_distinguish",
    "gate_eval",
    "glutamate_release",
    "make_epr",
    "membrane_potential",
    "precode",
    "random_qubit",
    "route_fiber",
    "run_echo",
    "run_scenario",
    "teleport",
    "transfer",
]
