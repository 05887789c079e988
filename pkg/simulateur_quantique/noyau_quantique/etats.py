"""
Vecteurs d'état : représentation exacte, algèbre tensorielle et mesure (règle de Born)

Convention d'ordre : le qubit 0 est le symbole le plus à gauche du ket et le
bit de poids fort de l'indice d'amplitude, |q0 q1 … q(n-1)⟩ ↦ Σ q_i 2^(n-1-i).
"""

import enum
import functools
from dataclasses import dataclass

import numpy as np

from .erreurs import ErreurDimension, ErreurIndiceQubit, ErreurNormalisation
from .portes import MATRICE_H


MAX_QUBITS = 24
TOLERANCE_NORME = 1e-10
TOLERANCE_INTRICATION = 1e-9
TOLERANCE_COMPOSANTES = 1e-12


class BaseMesure(enum.Enum):
    """Bases de mesure ; en base de Hadamard le bit 0 correspond à |+⟩"""

    CALCUL = 'computational'
    HADAMARD = 'hadamard'


class VecteurEtat:
    """
    État pur de n qubits : 2^n amplitudes complexes de norme 1

    Les amplitudes sont copiées à la construction puis figées.
    """

    __slots__ = ('_amplitudes', '_n_qubits')

    def __init__(self, amplitudes):
        tableau = np.array(amplitudes, dtype=np.complex128)
        if tableau.ndim != 1:
            raise ErreurDimension(f"Un vecteur d'état est unidimensionnel (forme {tableau.shape})")

        taille = tableau.size
        n_qubits = taille.bit_length() - 1
        if taille < 2 or 1 << n_qubits != taille:
            raise ErreurDimension(f"Longueur {taille} qui n'est pas 2^n avec n >= 1")
        if n_qubits > MAX_QUBITS:
            raise ErreurDimension(f"{n_qubits} qubits dépassent la limite de {MAX_QUBITS}")
        if not np.all(np.isfinite(tableau)):
            raise ErreurNormalisation("Amplitudes non finies")

        norme = float(np.vdot(tableau, tableau).real)
        if abs(norme - 1.0) > TOLERANCE_NORME:
            raise ErreurNormalisation(f"Norme au carré {norme!r} différente de 1")

        tableau.setflags(write=False)
        self._amplitudes = tableau
        self._n_qubits = n_qubits

    @property
    def amplitudes(self):
        return self._amplitudes

    @property
    def n_qubits(self):
        return self._n_qubits

    def probabilites(self):
        return np.abs(self._amplitudes) ** 2

    def proche(self, autre, tolerance=TOLERANCE_COMPOSANTES):
        """Égalité entrée par entrée (phase globale comprise)"""
        return (
            self._n_qubits == autre.n_qubits
            and bool(np.max(np.abs(self._amplitudes - autre.amplitudes)) < tolerance)
        )

    def __len__(self):
        return self._amplitudes.size

    def __repr__(self):
        return f"VecteurEtat(n_qubits={self._n_qubits}, amplitudes={self._amplitudes!r})"


@dataclass(frozen=True)
class ResultatMesure:
    """Bits lus et état renormalisé après effondrement"""

    bits: str
    etat_post: VecteurEtat


def _verifier_qubits(n_qubits):
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ErreurDimension(f"Nombre de qubits {n_qubits} hors de [1, {MAX_QUBITS}]")


def _verifier_indice(etat, q):
    if not 0 <= q < etat.n_qubits:
        raise ErreurIndiceQubit(f"Qubit {q} hors de [0, {etat.n_qubits})")


def bits_de(indice, n_qubits):
    """Chaîne de bits d'un indice de base, qubit 0 en tête"""
    return format(int(indice), f'0{n_qubits}b')


def etat_zero(n_qubits):
    """|00…0⟩"""
    _verifier_qubits(n_qubits)
    amplitudes = np.zeros(1 << n_qubits, dtype=np.complex128)
    amplitudes[0] = 1.0
    return VecteurEtat(amplitudes)


def etat_base(bits):
    """État de base |bits⟩, par exemple etat_base('01')"""
    if not bits or set(bits) - {'0', '1'}:
        raise ErreurDimension(f"Chaîne de bits invalide : {bits!r}")
    n_qubits = len(bits)
    _verifier_qubits(n_qubits)
    amplitudes = np.zeros(1 << n_qubits, dtype=np.complex128)
    amplitudes[int(bits, 2)] = 1.0
    return VecteurEtat(amplitudes)


KET_0 = etat_base('0')
KET_1 = etat_base('1')
KET_PLUS = VecteurEtat(np.array([1, 1]) / np.sqrt(2))
KET_MOINS = VecteurEtat(np.array([1, -1]) / np.sqrt(2))


def produit_tensoriel(a, b):
    """|a⟩ ⊗ |b⟩ ; les qubits de a précèdent ceux de b"""
    if a.n_qubits + b.n_qubits > MAX_QUBITS:
        raise ErreurDimension(
            f"Produit de {a.n_qubits} + {b.n_qubits} qubits au-delà de {MAX_QUBITS}"
        )
    return VecteurEtat(np.kron(a.amplitudes, b.amplitudes))


def produit_tensoriel_multiple(*etats):
    return functools.reduce(produit_tensoriel, etats)


def _verifier_tailles(a, b):
    if a.n_qubits != b.n_qubits:
        raise ErreurDimension(f"Tailles incompatibles : {a.n_qubits} et {b.n_qubits} qubits")


def produit_scalaire(a, b):
    """⟨a|b⟩ = Σ conj(a_i) b_i"""
    _verifier_tailles(a, b)
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def fidelite(a, b):
    """|⟨a|b⟩|², insensible à la phase globale"""
    return float(abs(produit_scalaire(a, b)) ** 2)


def est_produit_deux_qubits(etat):
    """
    Teste la séparabilité d'un état à deux qubits par le déterminant
    de la matrice M[i][j] = amplitudes[2i + j]
    """
    if etat.n_qubits != 2:
        raise ErreurDimension(f"État à deux qubits attendu ({etat.n_qubits} reçus)")
    matrice = etat.amplitudes.reshape(2, 2)
    return bool(abs(np.linalg.det(matrice)) < TOLERANCE_INTRICATION)


def appliquer_matrice(amplitudes, matrice, cibles, n_qubits):
    """
    Applique une matrice de k qubits aux qubits `cibles` d'un registre
    de n qubits, sans construire la matrice 2^n × 2^n

    Args:
        amplitudes: Tableau de 2^n amplitudes
        matrice: Matrice 2^k × 2^k, cibles[0] étant son bit de poids fort
        cibles: Indices des qubits visés
        n_qubits: Taille du registre

    Returns:
        np.ndarray: Nouvelles amplitudes
    """
    k = len(cibles)
    tenseur = np.asarray(amplitudes).reshape((2,) * n_qubits)
    porte = np.asarray(matrice).reshape((2,) * (2 * k))
    resultat = np.tensordot(porte, tenseur, axes=(list(range(k, 2 * k)), list(cibles)))
    resultat = np.moveaxis(resultat, list(range(k)), list(cibles))
    return np.ascontiguousarray(resultat).reshape(-1)


def appliquer_porte(etat, matrice, cibles):
    for q in cibles:
        _verifier_indice(etat, q)
    return VecteurEtat(appliquer_matrice(etat.amplitudes, matrice, cibles, etat.n_qubits))


def distribution_marginale(amplitudes, qubits, n_qubits):
    """
    Probabilités des 2^len(qubits) lectures des qubits indiqués,
    le premier qubit de la liste étant le bit de poids fort
    """
    probabilites = (np.abs(np.asarray(amplitudes)) ** 2).reshape((2,) * n_qubits)
    autres = tuple(q for q in range(n_qubits) if q not in qubits)
    marginale = probabilites.sum(axis=autres) if autres else probabilites
    restants = [q for q in range(n_qubits) if q in qubits]
    marginale = np.transpose(marginale, [restants.index(q) for q in qubits])
    return marginale.reshape(-1)


def tirer_indices(probabilites, rng, taille=None):
    """
    Tirage par inversion de la fonction de répartition cumulée

    Args:
        probabilites: Poids positifs (normalisés ici)
        rng: Générateur numpy
        taille: None pour un seul tirage, sinon nombre de tirages

    Returns:
        int ou np.ndarray: Indice(s) tiré(s)
    """
    cumul = np.cumsum(probabilites)
    tirages = rng.random(taille) * cumul[-1]
    indices = np.minimum(np.searchsorted(cumul, tirages, side='right'), cumul.size - 1)
    if taille is None:
        return int(indices)
    return indices


def mesurer_tout(etat, rng):
    """Mesure complète en base de calcul"""
    indice = tirer_indices(etat.probabilites(), rng)
    post = np.zeros_like(etat.amplitudes)
    post[indice] = 1.0
    return ResultatMesure(bits_de(indice, etat.n_qubits), VecteurEtat(post))


def mesurer_qubit(etat, q, base, rng):
    """
    Mesure partielle d'un qubit ; la base de Hadamard est obtenue par
    conjugaison H · mesure · H

    Args:
        etat: Vecteur d'état
        q: Indice du qubit mesuré
        base: BaseMesure
        rng: Générateur numpy

    Returns:
        ResultatMesure: Bit lu ('0' pour |0⟩ ou |+⟩) et état renormalisé
    """
    _verifier_indice(etat, q)
    n_qubits = etat.n_qubits
    amplitudes = etat.amplitudes
    if base is BaseMesure.HADAMARD:
        amplitudes = appliquer_matrice(amplitudes, MATRICE_H, (q,), n_qubits)

    tenseur = amplitudes.reshape(1 << q, 2, -1)
    p0 = float(np.sum(np.abs(tenseur[:, 0, :]) ** 2))
    p1 = float(np.sum(np.abs(tenseur[:, 1, :]) ** 2))
    resultat = 0 if rng.random() * (p0 + p1) < p0 else 1

    post = np.zeros_like(tenseur)
    post[:, resultat, :] = tenseur[:, resultat, :] / np.sqrt(p1 if resultat else p0)
    post = post.reshape(-1)
    if base is BaseMesure.HADAMARD:
        post = appliquer_matrice(post, MATRICE_H, (q,), n_qubits)

    return ResultatMesure(str(resultat), VecteurEtat(post))
