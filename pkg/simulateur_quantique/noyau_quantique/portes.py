"""
Portes quantiques : matrices unitaires du jeu universel, constructions
contrôlée et adjointe, décomposition de la porte de Toffoli
"""

import enum
import functools
from dataclasses import dataclass, field

import numpy as np

from .erreurs import ErreurDimension, ErreurNonUnitaire, ErreurParametres


TOLERANCE_UNITAIRE = 1e-12
PROFONDEUR_CONTROLE_MAX = 2


def _figer(matrice):
    matrice = np.array(matrice, dtype=np.complex128)
    matrice.setflags(write=False)
    return matrice


MATRICE_I = _figer(np.eye(2))
MATRICE_X = _figer([[0, 1], [1, 0]])
MATRICE_Y = _figer([[0, -1j], [1j, 0]])
MATRICE_Z = _figer([[1, 0], [0, -1]])
MATRICE_H = _figer(np.array([[1, 1], [1, -1]]) / np.sqrt(2))
MATRICE_S = _figer([[1, 0], [0, 1j]])
MATRICE_T = _figer([[1, 0], [0, np.exp(1j * np.pi / 4)]])
MATRICE_SWAP = _figer([
    [1, 0, 0, 0],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [0, 0, 0, 1],
])


def est_unitaire(matrice, tolerance=TOLERANCE_UNITAIRE):
    """Vérifie la condition U†U = I entrée par entrée"""
    matrice = np.asarray(matrice)
    if matrice.ndim != 2 or matrice.shape[0] != matrice.shape[1]:
        return False
    ecart = matrice.conj().T @ matrice - np.eye(matrice.shape[0])
    return bool(np.max(np.abs(ecart)) < tolerance)


def verifier_unitaire(matrice, tolerance=TOLERANCE_UNITAIRE):
    """
    Valide une matrice de porte (dimension puissance de deux, unitaire)

    Returns:
        np.ndarray: La matrice en complexes double précision

    Raises:
        ErreurDimension: Si la dimension n'est pas une puissance de deux
        ErreurNonUnitaire: Si U†U diffère de l'identité
    """
    matrice = np.asarray(matrice, dtype=np.complex128)
    if matrice.ndim != 2 or matrice.shape[0] != matrice.shape[1]:
        raise ErreurDimension(f"Matrice de porte non carrée : {matrice.shape}")
    dimension = matrice.shape[0]
    if dimension < 2 or dimension & (dimension - 1):
        raise ErreurDimension(f"Dimension {dimension} qui n'est pas une puissance de deux")
    if not est_unitaire(matrice, tolerance):
        raise ErreurNonUnitaire("La matrice ne satisfait pas U†U = I")
    return matrice


def adjointe(matrice):
    """Transposée conjuguée"""
    return np.asarray(matrice, dtype=np.complex128).conj().T


def controlee(matrice):
    """
    Construit la version contrôlée [[I, 0], [0, U]] d'une porte,
    le qubit de contrôle étant le plus significatif

    Args:
        matrice: Matrice unitaire U

    Returns:
        np.ndarray: Matrice de dimension double
    """
    matrice = verifier_unitaire(matrice)
    dimension = matrice.shape[0]
    resultat = np.eye(2 * dimension, dtype=np.complex128)
    resultat[dimension:, dimension:] = matrice
    return resultat


def matrice_rk(k):
    """R_k = diag(1, e^{2πi/2^k})"""
    if k < 1:
        raise ErreurParametres(f"R_k exige k >= 1 (reçu {k})")
    return np.array([[1, 0], [0, np.exp(2j * np.pi / 2 ** k)]], dtype=np.complex128)


class TypePorte(enum.Enum):
    I = 'I'
    X = 'X'
    Y = 'Y'
    Z = 'Z'
    H = 'H'
    S = 'S'
    T = 'T'
    RK = 'RK'
    CNOT = 'CNOT'
    SWAP = 'SWAP'
    TOFFOLI = 'CCX'
    PERSONNALISEE = 'PERSONNALISEE'
    CONTROLEE = 'CONTROLEE'


_AUTO_ADJOINTES = {
    TypePorte.I, TypePorte.X, TypePorte.Y, TypePorte.Z, TypePorte.H,
    TypePorte.CNOT, TypePorte.SWAP, TypePorte.TOFFOLI,
}

_ARITE = {
    TypePorte.CNOT: 2,
    TypePorte.SWAP: 2,
    TypePorte.TOFFOLI: 3,
}


@dataclass(frozen=True, eq=False)
class Porte:
    """
    Porte symbolique ; la matrice est calculée par matrice_de()

    Attributes:
        type: Nature de la porte
        k: Paramètre de R_k
        dague: True pour la version adjointe (S†, T†, R_k†)
        matrice: Matrice d'une porte personnalisée
        interne: Porte contrôlée par un qubit supplémentaire
    """

    type: TypePorte
    k: int = None
    dague: bool = False
    matrice: np.ndarray = field(default=None, repr=False)
    interne: 'Porte' = None

    def __post_init__(self):
        if self.type is TypePorte.RK and (self.k is None or self.k < 1):
            raise ErreurParametres(f"R_k exige k >= 1 (reçu {self.k})")
        if self.type is TypePorte.PERSONNALISEE:
            object.__setattr__(self, 'matrice', _figer(verifier_unitaire(self.matrice)))
        if self.type is TypePorte.CONTROLEE:
            if self.interne is None:
                raise ErreurParametres("Une porte contrôlée exige une porte interne")
            if self.profondeur_controle > PROFONDEUR_CONTROLE_MAX:
                raise ErreurParametres(
                    f"Imbrication de contrôles limitée à {PROFONDEUR_CONTROLE_MAX}"
                )

    @property
    def profondeur_controle(self):
        if self.type is TypePorte.CONTROLEE:
            return 1 + self.interne.profondeur_controle
        return 0

    @property
    def nombre_qubits(self):
        if self.type is TypePorte.CONTROLEE:
            return 1 + self.interne.nombre_qubits
        if self.type is TypePorte.PERSONNALISEE:
            return self.matrice.shape[0].bit_length() - 1
        return _ARITE.get(self.type, 1)

    def adjointe(self):
        """Porte adjointe, sous forme symbolique quand c'est possible"""
        if self.type in _AUTO_ADJOINTES:
            return self
        if self.type is TypePorte.CONTROLEE:
            return Porte(TypePorte.CONTROLEE, interne=self.interne.adjointe())
        if self.type is TypePorte.PERSONNALISEE:
            return Porte(TypePorte.PERSONNALISEE, matrice=adjointe(self.matrice))
        return Porte(self.type, k=self.k, dague=not self.dague)

    def _cle(self):
        octets = self.matrice.tobytes() if self.matrice is not None else None
        interne = self.interne._cle() if self.interne is not None else None
        return (self.type, self.k, self.dague, octets, interne)

    def __eq__(self, autre):
        if not isinstance(autre, Porte):
            return NotImplemented
        return self._cle() == autre._cle()

    def __hash__(self):
        return hash(self._cle())

    def __repr__(self):
        nom = self.type.value
        if self.k is not None:
            nom += f"({self.k})"
        if self.interne is not None:
            nom = f"C-{self.interne!r}"
        return nom + ('†' if self.dague else '')


PORTE_I = Porte(TypePorte.I)
PORTE_X = Porte(TypePorte.X)
PORTE_Y = Porte(TypePorte.Y)
PORTE_Z = Porte(TypePorte.Z)
PORTE_H = Porte(TypePorte.H)
PORTE_S = Porte(TypePorte.S)
PORTE_T = Porte(TypePorte.T)
PORTE_SDG = Porte(TypePorte.S, dague=True)
PORTE_TDG = Porte(TypePorte.T, dague=True)
PORTE_CNOT = Porte(TypePorte.CNOT)
PORTE_SWAP = Porte(TypePorte.SWAP)
PORTE_TOFFOLI = Porte(TypePorte.TOFFOLI)


def porte_rk(k, dague=False):
    return Porte(TypePorte.RK, k=k, dague=dague)


def porte_controlee(interne):
    return Porte(TypePorte.CONTROLEE, interne=interne)


def porte_personnalisee(matrice):
    return Porte(TypePorte.PERSONNALISEE, matrice=matrice)


_MATRICES_FIXES = {
    TypePorte.I: MATRICE_I,
    TypePorte.X: MATRICE_X,
    TypePorte.Y: MATRICE_Y,
    TypePorte.Z: MATRICE_Z,
    TypePorte.H: MATRICE_H,
    TypePorte.S: MATRICE_S,
    TypePorte.T: MATRICE_T,
    TypePorte.SWAP: MATRICE_SWAP,
}


@functools.lru_cache(maxsize=256)
def matrice_de(porte):
    """
    Matrice unitaire d'une porte symbolique

    Args:
        porte: Porte à évaluer

    Returns:
        np.ndarray: Matrice en lecture seule, qubit de contrôle en tête
    """
    if porte.type in _MATRICES_FIXES:
        matrice = _MATRICES_FIXES[porte.type]
    elif porte.type is TypePorte.RK:
        matrice = matrice_rk(porte.k)
    elif porte.type is TypePorte.CNOT:
        matrice = controlee(MATRICE_X)
    elif porte.type is TypePorte.TOFFOLI:
        matrice = controlee(controlee(MATRICE_X))
    elif porte.type is TypePorte.PERSONNALISEE:
        matrice = porte.matrice
    else:
        matrice = controlee(matrice_de(porte.interne))

    if porte.dague:
        matrice = adjointe(matrice)
    return _figer(matrice)


@dataclass(frozen=True)
class ApplicationPorte:
    """Porte appliquée à des qubits précis (contrôles en premier)"""

    porte: Porte
    cibles: tuple

    def __post_init__(self):
        cibles = tuple(int(q) for q in self.cibles)
        object.__setattr__(self, 'cibles', cibles)
        if len(cibles) != self.porte.nombre_qubits:
            raise ErreurParametres(
                f"{self.porte!r} agit sur {self.porte.nombre_qubits} qubit(s), "
                f"{len(cibles)} indice(s) fourni(s)"
            )
        if len(set(cibles)) != len(cibles):
            raise ErreurParametres(f"Indices de qubits répétés : {cibles}")
        if min(cibles) < 0:
            raise ErreurParametres(f"Indice de qubit négatif : {cibles}")


def decomposition_toffoli(controle_1=0, controle_2=1, cible=2):
    """
    Décomposition de Toffoli en portes à un et deux qubits
    {H, T, T†, S, CNOT}, construction de Nielsen & Chuang (16 portes)

    Returns:
        list: Liste d'ApplicationPorte
    """
    a, b, c = controle_1, controle_2, cible
    return [
        ApplicationPorte(PORTE_H, (c,)),
        ApplicationPorte(PORTE_CNOT, (b, c)),
        ApplicationPorte(PORTE_TDG, (c,)),
        ApplicationPorte(PORTE_CNOT, (a, c)),
        ApplicationPorte(PORTE_T, (c,)),
        ApplicationPorte(PORTE_CNOT, (b, c)),
        ApplicationPorte(PORTE_TDG, (c,)),
        ApplicationPorte(PORTE_CNOT, (a, c)),
        ApplicationPorte(PORTE_TDG, (b,)),
        ApplicationPorte(PORTE_T, (c,)),
        ApplicationPorte(PORTE_CNOT, (a, b)),
        ApplicationPorte(PORTE_H, (c,)),
        ApplicationPorte(PORTE_TDG, (b,)),
        ApplicationPorte(PORTE_CNOT, (a, b)),
        ApplicationPorte(PORTE_T, (a,)),
        ApplicationPorte(PORTE_S, (b,)),
    ]


def decomposition_swap(a=0, b=1):
    """SWAP = CNOT(a,b) · CNOT(b,a) · CNOT(a,b)"""
    return [
        ApplicationPorte(PORTE_CNOT, (a, b)),
        ApplicationPorte(PORTE_CNOT, (b, a)),
        ApplicationPorte(PORTE_CNOT, (a, b)),
    ]
