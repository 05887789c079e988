"""
Sous-routines quantiques : transformée de Fourier, rétroaction de phase,
estimation de phase, recherche de Grover, estimation d'amplitude et
oracle de réflexion
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from sklearn.linear_model import LinearRegression

from .circuits import (
    Circuit,
    circuit_adjoint,
    propager,
    remapper,
)
from .erreurs import ErreurDimension, ErreurParametres, ErreurVecteurPropre
from .etats import (
    BaseMesure,
    VecteurEtat,
    appliquer_matrice,
    distribution_marginale,
    mesurer_qubit,
    mesurer_tout,
    tirer_indices,
)
from .portes import (
    PORTE_H,
    PORTE_SWAP,
    ApplicationPorte,
    MATRICE_H,
    controlee,
    porte_controlee,
    porte_rk,
    verifier_unitaire,
)


logger = logging.getLogger(__name__)

MAX_QUBITS_QFT = 12
MAX_BITS_ESTIMATION = 10
MAX_QUBITS_GROVER = 14
MAX_QUBITS_PREPARATION = 12
MAX_T_AMPLITUDE = 64
MAX_QUBITS_REFLEXION = 10
TOLERANCE_VECTEUR_PROPRE = 1e-9


# Transformée de Fourier quantique

def circuit_qft(n, avec_permutation=True):
    """
    QFT sur n qubits : H puis R_k contrôlées sur chaque qubit, suivies du
    réseau de SWAP terminal qui remet le qubit 0 en poids fort

    Args:
        n: Nombre de qubits (1 à 12)
        avec_permutation: False pour omettre les SWAP

    Returns:
        Circuit: Sa matrice vaut (1/√2^n) ω^{jk}, ω = e^{2πi/2^n}
    """
    if not 1 <= n <= MAX_QUBITS_QFT:
        raise ErreurDimension(f"QFT limitée à [1, {MAX_QUBITS_QFT}] qubits (reçu {n})")

    etapes = []
    for j in range(n):
        etapes.append(ApplicationPorte(PORTE_H, (j,)))
        for k in range(2, n - j + 1):
            etapes.append(ApplicationPorte(porte_controlee(porte_rk(k)), (j + k - 1, j)))
    if avec_permutation:
        for j in range(n // 2):
            etapes.append(ApplicationPorte(PORTE_SWAP, (j, n - 1 - j)))
    return Circuit(n, etapes)


def circuit_qft_inverse(n, avec_permutation=True):
    return circuit_adjoint(circuit_qft(n, avec_permutation))


def matrice_dft(n):
    """Matrice de Fourier discrète construite directement"""
    dimension = 1 << n
    indices = np.arange(dimension)
    return np.exp(2j * np.pi * np.outer(indices, indices) / dimension) / np.sqrt(dimension)


# Rétroaction et estimation de phase

def valeur_propre(matrice, vecteur):
    """
    Vérifie que `vecteur` est propre pour `matrice` et renvoie λ, |λ| = 1

    Raises:
        ErreurVecteurPropre: Si ‖U v − λ v‖ >= 1e-9
    """
    matrice = verifier_unitaire(matrice)
    v = vecteur.amplitudes
    if matrice.shape[0] != v.size:
        raise ErreurDimension(f"Unitaire {matrice.shape} et vecteur de taille {v.size}")
    image = matrice @ v
    lam = complex(np.vdot(v, image))
    if np.linalg.norm(image - lam * v) >= TOLERANCE_VECTEUR_PROPRE or abs(abs(lam) - 1) >= TOLERANCE_VECTEUR_PROPRE:
        raise ErreurVecteurPropre("Le vecteur fourni n'est pas un vecteur propre de l'unitaire")
    return lam


@dataclass(frozen=True)
class ResultatRetroaction:
    etat: VecteurEtat
    ancilla: VecteurEtat
    fidelite_cible: float
    valeur_propre: complex


def demo_retroaction_phase(matrice, vecteur_propre):
    """
    Ancilla H puis U contrôlée : la valeur propre passe dans la phase
    relative de l'ancilla, la cible est inchangée

    Returns:
        ResultatRetroaction
    """
    lam = valeur_propre(matrice, vecteur_propre)
    m = vecteur_propre.n_qubits
    total = m + 1

    amplitudes = np.kron(np.array([1, 0], dtype=np.complex128), vecteur_propre.amplitudes)
    amplitudes = appliquer_matrice(amplitudes, MATRICE_H, (0,), total)
    amplitudes = appliquer_matrice(amplitudes, controlee(matrice), tuple(range(total)), total)

    blocs = amplitudes.reshape(2, -1)
    ancilla = blocs @ vecteur_propre.amplitudes.conj()
    fidelite_cible = float(np.sum(np.abs(ancilla) ** 2))
    return ResultatRetroaction(
        etat=VecteurEtat(amplitudes),
        ancilla=VecteurEtat(ancilla / np.linalg.norm(ancilla)),
        fidelite_cible=fidelite_cible,
        valeur_propre=lam,
    )


def puissances_carrees(matrice, nombre):
    """[U, U², U⁴, …, U^(2^(nombre-1))] par élévations au carré successives"""
    puissances = [np.asarray(matrice, dtype=np.complex128)]
    for _ in range(nombre - 1):
        puissances.append(puissances[-1] @ puissances[-1])
    return puissances


def appliquer_puissances_controlees(amplitudes, puissances, horloge, cibles, n_qubits):
    """
    Le qubit d'horloge j (poids fort en tête) contrôle U^(2^(c-1-j)),
    c étant la taille de l'horloge
    """
    c = len(horloge)
    for j, q in enumerate(horloge):
        amplitudes = appliquer_matrice(
            amplitudes, controlee(puissances[c - 1 - j]), (q,) + tuple(cibles), n_qubits
        )
    return amplitudes


def _inverse_qft_horloge(n, registre_inverse):
    if registre_inverse:
        # QFT inverse sans SWAP, câblée de bas en haut : la lecture sort bit de poids faible en tête
        return remapper(circuit_qft_inverse(n, avec_permutation=False), range(n - 1, -1, -1), n)
    return circuit_qft_inverse(n)


def _etat_estimation_phase(matrice, vecteur_propre, n, registre_inverse):
    if not 1 <= n <= MAX_BITS_ESTIMATION:
        raise ErreurDimension(f"Estimation de phase limitée à {MAX_BITS_ESTIMATION} bits")
    valeur_propre(matrice, vecteur_propre)
    m = vecteur_propre.n_qubits
    total = n + m

    horloge = np.full(1 << n, 1 / np.sqrt(1 << n), dtype=np.complex128)
    amplitudes = np.kron(horloge, vecteur_propre.amplitudes)
    amplitudes = appliquer_puissances_controlees(
        amplitudes, puissances_carrees(matrice, n), range(n), range(n, total), total
    )
    inverse = remapper(_inverse_qft_horloge(n, registre_inverse), range(n), total)
    return propager(amplitudes, inverse), total


def distribution_estimation_phase(matrice, vecteur_propre, n, registre_inverse=False):
    """Probabilités exactes des 2^n lectures du registre d'horloge"""
    amplitudes, total = _etat_estimation_phase(matrice, vecteur_propre, n, registre_inverse)
    return distribution_marginale(amplitudes, tuple(range(n)), total)


def decoder_phase(bits, ordre_inverse=False):
    """
    ϕ = Σ x_i / 2^(i+1) ; avec ordre_inverse le registre est lu à rebours,
    comme l'état |x_(n-1)⟩…|x_0⟩ produit par la transformée sans SWAP
    """
    if ordre_inverse:
        bits = bits[::-1]
    return sum(int(bit) / 2 ** (i + 1) for i, bit in enumerate(bits))


@dataclass(frozen=True)
class PhasePropre:
    """
    Attributes:
        phi: Phase décodée dans [0, 1)
        n_bits: Précision
        lecture: Registre d'horloge tel que mesuré
        probabilite: Probabilité exacte de cette lecture
    """

    phi: float
    n_bits: int
    lecture: str
    probabilite: float

    @property
    def binaire_exact(self):
        return float(self.phi * 2 ** self.n_bits).is_integer()


def estimation_phase(matrice, vecteur_propre, n, rng, registre_inverse=False):
    """
    Estimation de phase sur n bits : horloge en superposition, U^(2^j)
    contrôlées, QFT inverse, mesure de l'horloge

    Args:
        matrice: Unitaire U
        vecteur_propre: Vecteur propre de U
        n: Nombre de bits (<= 10)
        rng: Générateur numpy
        registre_inverse: Lecture à rebours (transformée inverse sans SWAP)

    Returns:
        PhasePropre
    """
    amplitudes, total = _etat_estimation_phase(matrice, vecteur_propre, n, registre_inverse)
    etat = VecteurEtat(amplitudes)
    distribution = distribution_marginale(amplitudes, tuple(range(n)), total)

    bits = []
    for q in range(n):
        resultat = mesurer_qubit(etat, q, BaseMesure.CALCUL, rng)
        bits.append(resultat.bits)
        etat = resultat.etat_post
    lecture = ''.join(bits)

    return PhasePropre(
        phi=decoder_phase(lecture, ordre_inverse=registre_inverse),
        n_bits=n,
        lecture=lecture,
        probabilite=float(distribution[int(lecture, 2)]),
    )


# Recherche de Grover et recherche naïve

@dataclass(frozen=True)
class ResultatRecherche:
    trouve: str
    requetes: int
    etat_registre: VecteurEtat = None


def iterations_optimales(n):
    """⌊(π/4)√(2^n)⌋"""
    return int(math.floor(math.pi / 4 * math.sqrt(2 ** n)))


def probabilite_succes_grover(n, iterations):
    """sin²((2k+1)θ), θ = arcsin(2^(-n/2)), pour un unique élément marqué"""
    theta = math.asin(2 ** (-n / 2))
    return math.sin((2 * iterations + 1) * theta) ** 2


def _diffusion(amplitudes, n):
    """2|s⟩⟨s| − I sur le registre x (n premiers qubits)"""
    blocs = amplitudes.reshape(1 << n, -1)
    return (2 * blocs.mean(axis=0, keepdims=True) - blocs).reshape(-1)


def _amplitudes_grover(oracle, n, iterations):
    total = n + 1
    uniforme = np.full(1 << n, 2 ** (-n / 2), dtype=np.complex128)
    amplitudes = np.kron(uniforme, np.array([1, -1], dtype=np.complex128) / np.sqrt(2))
    for _ in range(iterations):
        amplitudes = oracle.appliquer_amplitudes(amplitudes, total, range(n), (n,))
        amplitudes = _diffusion(amplitudes, n)
    blocs = amplitudes.reshape(1 << n, 2)
    return (blocs[:, 0] - blocs[:, 1]) / np.sqrt(2)


def recherche_grover(oracle, n, iterations, rng):
    """
    Itérations (oracle de phase, diffusion) puis mesure du registre x

    L'oracle de phase est l'oracle XOR appliqué à une ancilla |−⟩.

    Returns:
        ResultatRecherche: Candidat mesuré, requêtes comptées, état du registre
    """
    if not 1 <= n <= MAX_QUBITS_GROVER:
        raise ErreurDimension(f"Recherche de Grover limitée à {MAX_QUBITS_GROVER} qubits")
    registre = VecteurEtat(_amplitudes_grover(oracle, n, iterations))
    trouve = mesurer_tout(registre, rng).bits
    return ResultatRecherche(trouve, oracle.compteur_requetes, registre)


def recherche_naive(oracle, n, rng):
    """
    Superposition uniforme, oracle vers un qubit drapeau, mesure du drapeau ;
    le registre x n'est lu que si le drapeau vaut 1
    """
    total = n + 1
    uniforme = np.full(1 << n, 2 ** (-n / 2), dtype=np.complex128)
    amplitudes = np.kron(uniforme, np.array([1, 0], dtype=np.complex128))
    amplitudes = oracle.appliquer_amplitudes(amplitudes, total, range(n), (n,))

    drapeau = mesurer_qubit(VecteurEtat(amplitudes), n, BaseMesure.CALCUL, rng)
    if drapeau.bits == '0':
        return ResultatRecherche(None, oracle.compteur_requetes)
    lecture = mesurer_tout(drapeau.etat_post, rng).bits
    return ResultatRecherche(lecture[:n], oracle.compteur_requetes)


@dataclass(frozen=True)
class ResultatExposant:
    beta: float
    constante: float
    iterations: dict


def iterations_minimales(oracle, n, seuil, marque):
    """
    Plus petit nombre d'itérations dont la probabilité de succès atteint le seuil

    La recherche s'arrête au pic de probabilité, ceil(π / (4 asin(2^(-n/2)))) ;
    un seuil qui n'est pas atteint avant lève ErreurParametres.
    """
    total = n + 1
    uniforme = np.full(1 << n, 2 ** (-n / 2), dtype=np.complex128)
    amplitudes = np.kron(uniforme, np.array([1, -1], dtype=np.complex128) / np.sqrt(2))
    pic = math.ceil(math.pi / (4 * math.asin(2 ** (-n / 2))))
    for iterations in range(pic + 1):
        blocs = amplitudes.reshape(1 << n, 2)
        if np.sum(np.abs(blocs[marque]) ** 2) >= seuil:
            return iterations
        amplitudes = oracle.appliquer_amplitudes(amplitudes, total, range(n), (n,))
        amplitudes = _diffusion(amplitudes, n)
    raise ErreurParametres(f"Seuil {seuil} inatteignable en {pic} itérations pour n={n}")


def exposant_grover(oracles, seuil=0.9):
    """
    Ajuste k(n) = c · 2^(βn) sur les itérations minimales

    Args:
        oracles: dict n → (Oracle, élément marqué)
        seuil: Probabilité de succès visée

    Returns:
        ResultatExposant
    """
    iterations = {
        n: iterations_minimales(oracle, n, seuil, marque)
        for n, (oracle, marque) in sorted(oracles.items())
    }
    tailles = np.array(list(iterations), dtype=float).reshape(-1, 1)
    regression = LinearRegression().fit(tailles, np.log2(list(iterations.values())))
    return ResultatExposant(
        beta=float(regression.coef_[0]),
        constante=float(2 ** regression.intercept_),
        iterations=iterations,
    )


# Estimation d'amplitude

def borne_erreur_amplitude(a, t):
    """2π√(a(1−a))/t + π²/t²"""
    a = min(max(a, 0.0), 1.0)
    return 2 * math.pi * math.sqrt(a * (1 - a)) / t + math.pi ** 2 / t ** 2


@dataclass(frozen=True)
class EstimationAmplitude:
    """
    Attributes:
        a_estime: Médiane des estimations sin²(πk/t)
        t: Taille du registre d'horloge
        borne_erreur: Borne évaluée en a_estime
        lectures: Valeurs k mesurées
        requetes: t par répétition
    """

    a_estime: float
    t: int
    borne_erreur: float
    lectures: tuple
    requetes: int


def distribution_estimation_amplitude(psi, masque_bons, t):
    """
    Distribution exacte de la lecture k pour |ψ⟩ = A|0⟩ et Q = U V,
    U = 2|ψ⟩⟨ψ| − I, V = I − 2P

    Les puissances contrôlées sont appliquées comme Σ_y |y⟩⟨y| ⊗ Q^y,
    égal au produit des Q^(2^j) contrôlées.
    """
    p = t.bit_length() - 1
    m = psi.size.bit_length() - 1

    def rotation(v):
        v = np.where(masque_bons, -v, v)
        return 2 * psi * np.vdot(psi, v) - v

    branches = np.empty((t, psi.size), dtype=np.complex128)
    courant = psi
    for y in range(t):
        branches[y] = courant
        courant = rotation(courant)

    total = p + m
    amplitudes = branches.reshape(-1) / np.sqrt(t)
    amplitudes = propager(amplitudes, remapper(circuit_qft_inverse(p), range(p), total))
    return distribution_marginale(amplitudes, tuple(range(p)), total)


def _verifier_t(t):
    if t < 2 or t > MAX_T_AMPLITUDE or t & (t - 1):
        raise ErreurParametres(f"t doit être une puissance de deux dans [2, {MAX_T_AMPLITUDE}] (reçu {t})")


def estimation_amplitude(preparation, etats_bons, t, rng, repetitions=1):
    """
    Estimation d'amplitude par estimation de phase sur Q

    Args:
        preparation: Circuit A (au plus 12 qubits)
        etats_bons: Indices de base marqués par le projecteur P
        t: Puissance de deux <= 64
        rng: Générateur numpy
        repetitions: Nombre de répétitions dont on garde la médiane

    Returns:
        EstimationAmplitude
    """
    _verifier_t(t)
    if preparation.n_qubits > MAX_QUBITS_PREPARATION:
        raise ErreurDimension(f"Préparation limitée à {MAX_QUBITS_PREPARATION} qubits")
    if repetitions < 1:
        raise ErreurParametres("Au moins une répétition")

    dimension = 1 << preparation.n_qubits
    psi = propager(np.eye(dimension, 1, dtype=np.complex128).reshape(-1), preparation)
    indices = [int(i) for i in etats_bons]
    hors_limites = [i for i in indices if not 0 <= i < dimension]
    if hors_limites:
        raise ErreurParametres(f"États marqués hors de [0, {dimension}) : {hors_limites}")
    masque = np.zeros(dimension, dtype=bool)
    masque[indices] = True

    distribution = distribution_estimation_amplitude(psi, masque, t)
    lectures = tirer_indices(distribution, rng, repetitions)
    a_estime = float(np.median(np.sin(np.pi * lectures / t) ** 2))
    return EstimationAmplitude(
        a_estime=a_estime,
        t=t,
        borne_erreur=borne_erreur_amplitude(a_estime, t),
        lectures=tuple(int(k) for k in lectures),
        requetes=t * repetitions,
    )


def oracle_reflexion(psi):
    """U_ψ = I − 2|ψ⟩⟨ψ|"""
    if psi.n_qubits > MAX_QUBITS_REFLEXION:
        raise ErreurDimension(f"Oracle de réflexion limité à {MAX_QUBITS_REFLEXION} qubits")
    v = psi.amplitudes
    return np.eye(v.size, dtype=np.complex128) - 2 * np.outer(v, v.conj())
