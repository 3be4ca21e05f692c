"""Molecular reaction kinetics for ethane steam cracking.

Eight-reaction molecular scheme (Sundaram & Froment heritage) with Arrhenius
rate coefficients, first/second-order rate expressions and temperature-
corrected reaction enthalpies.  All data is loaded from a versioned YAML file
and is immutable afterwards; every function here is pure.

Units are SI throughout (mol, m, s, K, Pa, J).  The data file states rate
constants in the original kmol-based convention; the loader rescales
second-order prefactors to m3/(mol s) so that concentrations can be plain
mol/m3 everywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np
import yaml

from .errors import ConfigurationError

R_GAS = 8.314  # J/(mol K)
T_REF_ENTHALPY = 298.0  # K, reference for standard reaction enthalpies

_ELEMENTS = ("C", "H", "O")


@dataclass(frozen=True)
class Species:
    """A pure component: name, molar mass and frozen molar heat capacity."""

    name: str
    molar_mass: float  # kg/mol
    cp: float  # J/(mol K), evaluated at 750 C
    formula: dict = field(default_factory=dict)  # element -> atom count
    inert: bool = False

    def __post_init__(self):
        if self.molar_mass <= 0:
            raise ConfigurationError(f"{self.name}: molar mass must be > 0")
        if self.cp <= 0:
            raise ConfigurationError(f"{self.name}: cp must be > 0")


@dataclass(frozen=True)
class Reaction:
    """One reaction: stoichiometry, Arrhenius parameters and enthalpy.

    ``order_fwd``/``order_rev`` list the species indices whose concentrations
    multiply in the rate expression (one index = first order, two = second
    order).  ``a_rev`` is None for irreversible reactions.
    """

    rid: int
    stoich: np.ndarray  # signed integers, one per species
    dh0: float  # J/mol at 298 K
    a_fwd: float
    e_fwd: float  # J/mol
    order_fwd: tuple
    a_rev: float | None = None
    e_rev: float | None = None
    order_rev: tuple = ()

    @property
    def reversible(self) -> bool:
        return self.a_rev is not None


class ReactionSystem:
    """The full species table + reaction set, with vectorized rate kernels."""

    def __init__(self, species: list[Species], reactions: list[Reaction]):
        self.species = tuple(species)
        self.reactions = tuple(reactions)
        self.n_species = len(species)
        self.n_reactions = len(reactions)
        self.index = {sp.name: j for j, sp in enumerate(species)}

        self.molar_mass = np.array([sp.molar_mass for sp in species])
        self.cp = np.array([sp.cp for sp in species])
        self.stoich = np.array([rx.stoich for rx in reactions], dtype=float)
        self.dh0 = np.array([rx.dh0 for rx in reactions])
        # delta-cp per reaction, for the linear-in-T enthalpy correction
        self.dcp = self.stoich @ self.cp

        self.element_counts = np.array(
            [[sp.formula.get(el, 0) for sp in species] for el in _ELEMENTS],
            dtype=float,
        )
        self._check_element_balance()

        # flat arrays for the rate kernel: forward and optional reverse terms
        self.a_fwd = np.array([rx.a_fwd for rx in reactions])
        self.e_fwd = np.array([rx.e_fwd for rx in reactions])
        self._fwd_i = np.array([rx.order_fwd[0] for rx in reactions])
        self._fwd_j = np.array(
            [rx.order_fwd[1] if len(rx.order_fwd) > 1 else -1 for rx in reactions]
        )
        self._rev = np.array([rx.reversible for rx in reactions])
        self.a_rev = np.array([rx.a_rev if rx.reversible else 0.0 for rx in reactions])
        self.e_rev = np.array([rx.e_rev if rx.reversible else 0.0 for rx in reactions])
        self._rev_i = np.array(
            [rx.order_rev[0] if rx.reversible else 0 for rx in reactions]
        )
        self._rev_j = np.array(
            [rx.order_rev[1] if rx.reversible and len(rx.order_rev) > 1 else -1
             for rx in reactions]
        )

    def _check_element_balance(self):
        imbalance = self.element_counts @ self.stoich.T  # elements x reactions
        if not np.allclose(imbalance, 0.0, atol=1e-12):
            bad = np.argwhere(np.abs(imbalance) > 1e-12)
            raise ConfigurationError(
                f"element balance violated for reactions {sorted(set(bad[:, 1] + 1))}"
            )

    def _rx(self, rid: int) -> Reaction:
        if not 1 <= rid <= self.n_reactions:
            raise ValueError(f"unknown reaction id {rid}")
        return self.reactions[rid - 1]

    def arrhenius(self, rid: int, T: float, reverse: bool = False) -> float:
        """Rate coefficient A*exp(-E/(R*T)) of reaction ``rid`` at ``T``."""
        if T <= 0:
            raise ValueError("temperature must be > 0 K")
        rx = self._rx(rid)
        if reverse:
            if not rx.reversible:
                raise ValueError(f"reaction {rid} has no reverse term")
            return rx.a_rev * np.exp(-rx.e_rev / (R_GAS * T))
        return rx.a_fwd * np.exp(-rx.e_fwd / (R_GAS * T))

    def rates(self, flows: np.ndarray, T: float, P: float) -> np.ndarray:
        """Reaction rates r_i in mol/(m3 s) for molar flows ``flows`` (mol/s).

        Concentration of species j is (F_j/F_tot)*(P/(R*T)); the steam
        diluent counts in F_tot.
        """
        flows = np.asarray(flows, dtype=float)
        if flows.shape != (self.n_species,):
            raise ValueError(f"expected {self.n_species} molar flows")
        if np.any(flows < 0):
            raise ValueError("molar flows must be >= 0")
        if T <= 0 or P <= 0:
            raise ValueError("T and P must be > 0")
        f_tot = flows.sum()
        if f_tot <= 0:
            raise ValueError("degenerate state: total molar flow is zero")
        conc = (flows / f_tot) * (P / (R_GAS * T))
        return self._rates_from_conc(conc, T)

    def _rates_from_conc(self, conc: np.ndarray, T: float) -> np.ndarray:
        k = self.a_fwd * np.exp(-self.e_fwd / (R_GAS * T))
        fwd = conc[self._fwd_i]
        second = self._fwd_j >= 0
        fwd = np.where(second, fwd * conc[self._fwd_j], fwd)
        r = k * fwd
        if self._rev.any():
            krev = self.a_rev * np.exp(-self.e_rev / (R_GAS * T))
            rev = conc[self._rev_i] * np.where(
                self._rev_j >= 0, conc[np.maximum(self._rev_j, 0)], 1.0
            )
            r = r - np.where(self._rev, krev * rev, 0.0)
        return r

    def reaction_enthalpy(self, rid: int, T: float) -> float:
        """Reaction enthalpy in J/mol with the linear cp correction."""
        if T <= 0:
            raise ValueError("temperature must be > 0 K")
        rx = self._rx(rid)
        return rx.dh0 + self.dcp[rid - 1] * (T - T_REF_ENTHALPY)

    def reaction_enthalpies(self, T: float) -> np.ndarray:
        """Vector of reaction enthalpies (J/mol) at temperature ``T``."""
        return self.dh0 + self.dcp * (T - T_REF_ENTHALPY)


def _parse_rate_term(term: dict, index: dict, basis_scale: float):
    a = float(term["A"])
    e = float(term["E_kj_per_mol"]) * 1e3
    order = tuple(index[name] for name in term["order"])
    if len(order) == 2:
        a /= basis_scale  # kmol-based m3/(kmol s) -> m3/(mol s)
    elif len(order) != 1:
        raise ConfigurationError("rate order must list one or two species")
    return a, e, order


def load_reaction_system(path: str | Path | None = None) -> ReactionSystem:
    """Load the reaction system from YAML (packaged default if no path)."""
    if path is None:
        ref = resources.files("crackgrid") / "data" / "reaction_system.yaml"
        raw = yaml.safe_load(ref.read_text())
    else:
        raw = yaml.safe_load(Path(path).read_text())

    if raw.get("version") != 1:
        raise ConfigurationError("unsupported reaction_system file version")
    basis = raw.get("concentration_basis", "mol/m3")
    basis_scale = {"mol/m3": 1.0, "kmol/m3": 1e3}.get(basis)
    if basis_scale is None:
        raise ConfigurationError(f"unknown concentration basis {basis!r}")

    species = [
        Species(
            name=s["name"],
            molar_mass=float(s["molar_mass_kg_per_mol"]),
            cp=float(s["cp_j_per_mol_k"]),
            formula=dict(s.get("formula", {})),
            inert=bool(s.get("inert", False)),
        )
        for s in raw["species"]
    ]
    index = {sp.name: j for j, sp in enumerate(species)}

    reactions = []
    for rx in raw["reactions"]:
        stoich = np.zeros(len(species))
        for name, nu in rx["stoichiometry"].items():
            stoich[index[name]] = float(nu)
        a_f, e_f, order_f = _parse_rate_term(rx["forward"], index, basis_scale)
        a_r = e_r = None
        order_r = ()
        if "reverse" in rx:
            a_r, e_r, order_r = _parse_rate_term(rx["reverse"], index, basis_scale)
        reactions.append(
            Reaction(
                rid=int(rx["id"]),
                stoich=stoich,
                dh0=float(rx["dh0_kj_per_mol"]) * 1e3,
                a_fwd=a_f,
                e_fwd=e_f,
                order_fwd=order_f,
                a_rev=a_r,
                e_rev=e_r,
                order_rev=order_r,
            )
        )
    if [rx.rid for rx in reactions] != list(range(1, len(reactions) + 1)):
        raise ConfigurationError("reaction ids must be 1..n in order")
    return ReactionSystem(species, reactions)
