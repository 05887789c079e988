"""
Algorithmes appliqués : gradient de Jordan, différences finies, systèmes
linéaires (HHL et régression MCO), moyenne de Monte Carlo, QUBO par
énumération et interpolation de Vandermonde
"""

import enum
import logging
import math
from dataclasses import dataclass

import numpy as np
from sklearn.linear_model import LinearRegression

from .circuits import (
    Circuit,
    ModeOracle,
    Oracle,
    OracleClassique,
    concatener,
    propager,
    remapper,
)
from .erreurs import (
    ErreurConditionnement,
    ErreurDimension,
    ErreurNonHermitienne,
    ErreurNormalisation,
    ErreurParametres,
)
from .essais import generateur_essai
from .etats import (
    MAX_QUBITS,
    BaseMesure,
    VecteurEtat,
    appliquer_matrice,
    distribution_marginale,
    etat_zero,
    fidelite,
    mesurer_qubit,
    tirer_indices,
)
from .portes import PORTE_H, PORTE_X, ApplicationPorte, porte_personnalisee
from .sous_routines import (
    EstimationAmplitude,
    appliquer_puissances_controlees,
    borne_erreur_amplitude,
    circuit_qft,
    circuit_qft_inverse,
    distribution_estimation_amplitude,
    estimation_amplitude,
    puissances_carrees,
)


logger = logging.getLogger(__name__)

TOLERANCE_HERMITIENNE = 1e-12
TOLERANCE_NORME_SECOND_MEMBRE = 1e-10
MAX_QUBITS_HHL = 6
MAX_QUBITS_MONTE_CARLO = 7
MAX_VARIABLES_QUBO = 24
TAILLE_BLOC_QUBO = 1 << 16
SEUIL_CONDITIONNEMENT = 1e12


# Gradient de Jordan

@dataclass(frozen=True)
class ResultatGradient:
    """
    Attributes:
        gradient: Estimation du gradient
        requetes: Appels à l'oracle (compteur)
        lectures: Entiers lus par registre (version quantique seulement)
    """

    gradient: np.ndarray
    requetes: int
    lectures: tuple = None


class ProblemeGradient:
    """
    Gradient de f en un point par lecture de Fourier d'une seule requête

    Args:
        fonction: f : R^d → R
        point: Point d'évaluation x0
        n: Bits par registre d'entrée (N = 2^n points par direction)
        m: Borne sur les composantes du gradient
        l: Largeur de la fenêtre d'échantillonnage
        theta: Précision visée sur chaque composante
        plage: max(f) − min(f) déclaré sur la fenêtre
    """

    def __init__(self, fonction, point, n, m, l, theta, plage):
        self.fonction = fonction
        self.point = np.atleast_1d(np.asarray(point, dtype=float))
        self.n = int(n)
        self.m = float(m)
        self.l = float(l)
        self.theta = float(theta)
        self.plage = float(plage)

        if self.n < 1:
            raise ErreurParametres(f"Au moins un bit par registre (n={self.n})")
        if self.m <= 0 or self.l <= 0 or self.theta <= 0:
            raise ErreurParametres("m, l et theta doivent être strictement positifs")
        if self.plage < 0:
            raise ErreurParametres(f"Plage de f négative : {self.plage}")
        if self.d * self.n + self.n0 > MAX_QUBITS:
            raise ErreurDimension(
                f"{self.d} registres de {self.n} qubits plus {self.n0} qubits de sortie "
                f"dépassent {MAX_QUBITS}"
            )

    @property
    def d(self):
        return self.point.size

    @property
    def N(self):
        return 1 << self.n

    @property
    def n0(self):
        """Taille du registre de sortie, logarithme arrondi au supérieur"""
        if self.plage == 0:
            return 1
        resolution = (self.m * self.l / self.N) * (self.theta / (2 * math.pi))
        return max(1, math.ceil(math.log2(self.plage / resolution)))

    @property
    def N0(self):
        return 1 << self.n0

    def decaler(self, deltas):
        """x0 + l (δ − N/2) / N"""
        return self.point + self.l * (np.asarray(deltas, dtype=float) - self.N / 2) / self.N


def _composantes(indice, d, n):
    masque = (1 << n) - 1
    return [(indice >> (n * (d - 1 - j))) & masque for j in range(d)]


def gradient_jordan(probleme, rng):
    """
    Gradient en une requête : registres d'entrée en superposition, sortie
    préparée dans la transformée inverse de |1⟩, un oracle additif, puis
    transformée inverse sur chaque registre d'entrée

    Args:
        probleme: ProblemeGradient
        rng: Générateur numpy

    Returns:
        ResultatGradient: Composantes m·k_j/N avec k_j centré dans [−N/2, N/2)
    """
    d, n, n0, N = probleme.d, probleme.n, probleme.n0, probleme.N
    entree = d * n
    total = entree + n0
    echelle = N * probleme.N0 / (probleme.m * probleme.l)

    def evaluer(indice):
        valeur = float(probleme.fonction(probleme.decaler(_composantes(indice, d, n))))
        if not math.isfinite(valeur):
            raise ErreurParametres(f"f non finie pour l'entrée {indice}")
        return int(round(valeur * echelle)) % probleme.N0

    oracle = Oracle(entree, n0, evaluer, ModeOracle.ADDITION)

    preparation = Circuit(
        total,
        [ApplicationPorte(PORTE_H, (q,)) for q in range(entree)]
        + [ApplicationPorte(PORTE_X, (total - 1,))],
    )
    preparation = concatener(
        preparation, remapper(circuit_qft_inverse(n0), range(entree, total), total)
    )
    amplitudes = propager(etat_zero(total).amplitudes, preparation)
    amplitudes = oracle.appliquer_amplitudes(
        amplitudes, total, tuple(range(entree)), tuple(range(entree, total))
    )
    for j in range(d):
        amplitudes = propager(
            amplitudes, remapper(circuit_qft_inverse(n), range(j * n, (j + 1) * n), total)
        )

    distribution = distribution_marginale(amplitudes, tuple(range(entree)), total)
    lectures = _composantes(tirer_indices(distribution, rng), d, n)
    centres = [k - N if k >= N // 2 else k for k in lectures]
    gradient = probleme.m * np.array(centres, dtype=float) / N

    logger.debug("Gradient de Jordan : lectures %s, %d requête(s)", lectures, oracle.compteur_requetes)
    return ResultatGradient(
        gradient=gradient,
        requetes=oracle.compteur_requetes,
        lectures=tuple(int(k) for k in lectures),
    )


class SchemaDifferences(enum.Enum):
    AVANT = 'forward'
    CENTRE = 'centered'


def gradient_differences_finies(fonction, point, schema, pas):
    """
    Gradient classique : d + 1 évaluations en différences avant,
    2d en différences centrées

    Args:
        fonction: f : R^d → R
        point: Point d'évaluation
        schema: SchemaDifferences.AVANT ou SchemaDifferences.CENTRE
        pas: l > 0

    Returns:
        ResultatGradient
    """
    if pas <= 0:
        raise ErreurParametres(f"Pas strictement positif attendu ({pas})")
    try:
        schema = SchemaDifferences(schema)
    except ValueError:
        raise ErreurParametres(f"Schéma inconnu : {schema!r}") from None

    x = np.atleast_1d(np.asarray(point, dtype=float))
    oracle = OracleClassique(fonction)
    base = np.eye(x.size)
    if schema is SchemaDifferences.AVANT:
        valeur = oracle(x)
        gradient = [(oracle(x + pas * e) - valeur) / pas for e in base]
    else:
        gradient = [(oracle(x + pas * e) - oracle(x - pas * e)) / (2 * pas) for e in base]
    return ResultatGradient(gradient=np.array(gradient, dtype=float), requetes=oracle.compteur_requetes)


# Systèmes linéaires

class SystemeLineaire:
    """
    Système A x = b avec A hermitienne de dimension 2^k et b unitaire

    Attributes:
        A: Matrice hermitienne
        b: Second membre normalisé
        valeurs_propres: Spectre de A (calculé si absent)
        dimension_origine: Taille de la matrice d'origine pour un plongement hermitien
    """

    def __init__(self, A, b, valeurs_propres=None, dimension_origine=None):
        A = np.array(A, dtype=np.complex128)
        b = np.array(b, dtype=np.complex128).reshape(-1)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ErreurDimension(f"Matrice non carrée : {A.shape}")
        dimension = A.shape[0]
        if dimension < 2 or dimension & (dimension - 1):
            raise ErreurDimension(f"Dimension {dimension} qui n'est pas une puissance de deux")
        if dimension > 1 << MAX_QUBITS_HHL:
            raise ErreurDimension(f"Systèmes limités à 2^{MAX_QUBITS_HHL} inconnues")
        if np.max(np.abs(A - A.conj().T)) > TOLERANCE_HERMITIENNE:
            raise ErreurNonHermitienne("A diffère de sa transposée conjuguée")
        if b.size != dimension:
            raise ErreurDimension(f"Second membre de taille {b.size} pour une matrice {dimension}")
        if abs(np.linalg.norm(b) - 1.0) > TOLERANCE_NORME_SECOND_MEMBRE:
            raise ErreurNormalisation("Le second membre doit être de norme 1")

        self.A = A
        self.b = b
        if valeurs_propres is None:
            valeurs_propres = np.linalg.eigvalsh(A)
        self.valeurs_propres = np.sort(np.asarray(valeurs_propres, dtype=float))
        self.dimension_origine = dimension_origine

    @classmethod
    def depuis_non_hermitienne(cls, A, b):
        """
        Plongement C = [[0, A], [A†, 0]] et second membre [b; 0] ;
        la solution est la moitié basse du vecteur obtenu
        """
        A = np.array(A, dtype=np.complex128)
        b = np.array(b, dtype=np.complex128).reshape(-1)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ErreurDimension(f"Matrice non carrée : {A.shape}")
        norme = np.linalg.norm(b)
        if norme == 0:
            raise ErreurNormalisation("Second membre nul")
        dimension = A.shape[0]
        zero = np.zeros_like(A)
        C = np.block([[zero, A], [A.conj().T, zero]])
        second = np.concatenate([b / norme, np.zeros(dimension, dtype=np.complex128)])
        return cls(C, second, dimension_origine=dimension)

    @property
    def k(self):
        return self.A.shape[0].bit_length() - 1

    @property
    def kappa(self):
        absolues = np.abs(self.valeurs_propres)
        if absolues.min() == 0:
            return math.inf
        return float(absolues.max() / absolues.min())

    def extraire(self, vecteur):
        """Composantes utiles d'un vecteur solution, renormalisées"""
        vecteur = np.asarray(vecteur)
        if self.dimension_origine is not None:
            vecteur = vecteur[self.dimension_origine:]
        return vecteur / np.linalg.norm(vecteur)

    def solution_classique(self):
        """A⁻¹b normalisé (pseudo-inverse si A est singulière)"""
        return self.extraire(np.linalg.pinv(self.A) @ self.b)


@dataclass(frozen=True)
class ResultatHHL:
    """
    Attributes:
        etat_solution: État du registre d'entrée après post-sélection
        solution: Composantes utiles, normalisées
        accepte: Lecture de l'ancilla égale à 1
        probabilite_acceptation: Probabilité de cette lecture
        constante: Constante C de la rotation
        residu_horloge: Poids résiduel hors de l'horloge |0⟩ après décalcul
    """

    etat_solution: VecteurEtat
    solution: np.ndarray
    accepte: bool
    probabilite_acceptation: float
    constante: float
    residu_horloge: float


def _valeurs_horloge(c, t0, signees):
    y = np.arange(1 << c)
    if signees:
        y = np.where(y >= 1 << (c - 1), y - (1 << c), y)
    return 2 * math.pi * y / (t0 * (1 << c))


def _matrice_rotation(valeurs, constante):
    """Rotation de l'ancilla conditionnée par l'horloge ; ordre (horloge…, ancilla)"""
    matrice = np.zeros((2 * valeurs.size, 2 * valeurs.size), dtype=np.complex128)
    for y, lam in enumerate(valeurs):
        r = 0.0 if lam == 0 else float(np.clip(constante / lam, -1.0, 1.0))
        s = math.sqrt(1.0 - r * r)
        matrice[2 * y:2 * y + 2, 2 * y:2 * y + 2] = [[s, -r], [r, s]]
    return matrice


def resoudre_hhl(
    systeme,
    bits_horloge,
    rng,
    t0=None,
    constante=None,
    preparation=None,
    valeurs_propres_signees=None,
):
    """
    Résolution quantique de A x = b : estimation de phase de e^{iAt0},
    rotation de l'ancilla d'amplitude C/λ, décalcul puis post-sélection

    Registres : ancilla (qubit 0), horloge (1…c), entrée (c+1…c+k).

    Args:
        systeme: SystemeLineaire
        bits_horloge: Taille c de l'horloge
        rng: Générateur numpy
        t0: Temps d'évolution (2π/2^c par défaut : valeurs propres entières exactes)
        constante: C, par défaut la plus petite |valeur propre|
        preparation: Circuit préparant |b⟩ depuis |0⟩ (sinon |b⟩ est chargé directement)
        valeurs_propres_signees: Lecture signée de l'horloge (défaut : spectre négatif présent)

    Returns:
        ResultatHHL: Le rejet est un résultat, pas une erreur
    """
    c, k = int(bits_horloge), systeme.k
    if c < 1 or 1 + c + k > MAX_QUBITS:
        raise ErreurDimension(f"Horloge de {c} qubits invalide pour {k} qubits d'entrée")
    if t0 is None:
        t0 = 2 * math.pi / (1 << c)
    absolues = np.abs(systeme.valeurs_propres)
    non_nulles = absolues[absolues > TOLERANCE_HERMITIENNE]
    if non_nulles.size == 0:
        raise ErreurParametres("Matrice nulle")
    if constante is None:
        constante = float(non_nulles.min())
    if constante <= 0 or constante > non_nulles.min() + TOLERANCE_HERMITIENNE:
        raise ErreurParametres(
            f"La constante C={constante} doit être dans ]0, {non_nulles.min()}]"
        )
    if valeurs_propres_signees is None:
        valeurs_propres_signees = bool(systeme.valeurs_propres.min() < 0)

    total = 1 + c + k
    horloge = tuple(range(1, c + 1))
    entree = tuple(range(c + 1, total))

    if preparation is not None:
        if preparation.n_qubits != k:
            raise ErreurDimension(f"Préparation de {preparation.n_qubits} qubits au lieu de {k}")
        b = propager(etat_zero(k).amplitudes, preparation)
        if np.max(np.abs(b - systeme.b)) > 1e-9:
            raise ErreurParametres("La préparation ne produit pas le second membre déclaré")
    else:
        b = systeme.b

    valeurs, vecteurs = np.linalg.eigh(systeme.A)
    evolution = vecteurs @ np.diag(np.exp(1j * valeurs * t0)) @ vecteurs.conj().T
    puissances = puissances_carrees(evolution, c)

    amplitudes = np.zeros(1 << total, dtype=np.complex128)
    amplitudes[: 1 << k] = b
    hadamards = Circuit(total, [ApplicationPorte(PORTE_H, (q,)) for q in horloge])
    amplitudes = propager(amplitudes, hadamards)
    amplitudes = appliquer_puissances_controlees(amplitudes, puissances, horloge, entree, total)
    amplitudes = propager(amplitudes, remapper(circuit_qft_inverse(c), horloge, total))

    rotation = _matrice_rotation(_valeurs_horloge(c, t0, valeurs_propres_signees), constante)
    amplitudes = appliquer_matrice(amplitudes, rotation, horloge + (0,), total)

    amplitudes = propager(amplitudes, remapper(circuit_qft(c), horloge, total))
    inverses = [p.conj().T for p in puissances]
    amplitudes = appliquer_puissances_controlees(amplitudes, inverses, horloge, entree, total)
    amplitudes = propager(amplitudes, hadamards)

    moitie = 1 << (c + k)
    bloc = amplitudes[moitie:].reshape(1 << c, 1 << k)
    probabilite = float(np.sum(np.abs(bloc) ** 2))
    if probabilite <= 0:
        raise ErreurConditionnement("Probabilité d'acceptation nulle", systeme.kappa)
    residu = float(np.sum(np.abs(bloc[1:]) ** 2) / probabilite)
    accepte = mesurer_qubit(VecteurEtat(amplitudes), 0, BaseMesure.CALCUL, rng).bits == '1'

    vecteur = bloc[0] / np.linalg.norm(bloc[0])
    logger.debug(
        "HHL : acceptation %.6f, résidu d'horloge %.3e, C=%s", probabilite, residu, constante
    )
    return ResultatHHL(
        etat_solution=VecteurEtat(vecteur),
        solution=systeme.extraire(vecteur),
        accepte=accepte,
        probabilite_acceptation=probabilite,
        constante=float(constante),
        residu_horloge=residu,
    )


MATRICE_MCO = np.array([
    [15, 9, 5, -3],
    [9, 15, 3, -5],
    [5, 3, 15, -9],
    [-3, -5, -9, 15],
]) / 4
SECOND_MEMBRE_MCO = np.full(4, 0.5)
CIBLE_MCO = np.array([-1, 7, 11, 13]) / math.sqrt(340)
BITS_HORLOGE_MCO = 4


@dataclass(frozen=True)
class ResultatMCO:
    hhl: ResultatHHL
    fidelite: float
    beta_classique: np.ndarray
    proportionnalite: float


def demo_mco(rng):
    """
    Équations normales X'X β = X'y de valeurs propres 1, 2, 4 et 8 :
    |X'y⟩ préparé par deux Hadamard, horloge de 4 qubits

    Returns:
        ResultatMCO: fidélité avec (−|00⟩ + 7|01⟩ + 11|10⟩ + 13|11⟩)/√340
        et écart maximal entre 32·β̂ classique et [−1, 7, 11, 13]
    """
    systeme = SystemeLineaire(MATRICE_MCO, SECOND_MEMBRE_MCO, valeurs_propres=[1, 2, 4, 8])
    preparation = Circuit(2, [ApplicationPorte(PORTE_H, (0,)), ApplicationPorte(PORTE_H, (1,))])
    resultat = resoudre_hhl(systeme, BITS_HORLOGE_MCO, rng, preparation=preparation)

    beta = np.linalg.solve(MATRICE_MCO, SECOND_MEMBRE_MCO)
    proportionnalite = float(np.max(np.abs(32 * beta - np.array([-1, 7, 11, 13]))))
    return ResultatMCO(
        hhl=resultat,
        fidelite=fidelite(resultat.etat_solution, VecteurEtat(CIBLE_MCO)),
        beta_classique=beta,
        proportionnalite=proportionnalite,
    )


# Monte Carlo

@dataclass(frozen=True)
class ResultatMonteCarlo:
    mu: float
    requetes: int
    estimation: EstimationAmplitude


def circuit_monte_carlo(preparation, phi):
    """
    A = W (P ⊗ I) avec W |x⟩|0⟩ = |x⟩(√(1−φ(x))|0⟩ + √φ(x)|1⟩) ;
    les états bons sont ceux dont l'ancilla (dernier qubit) vaut 1

    Returns:
        tuple: (Circuit, indices des états bons)
    """
    k = preparation.n_qubits
    if k > MAX_QUBITS_MONTE_CARLO:
        raise ErreurDimension(f"Préparation de Monte Carlo limitée à {MAX_QUBITS_MONTE_CARLO} qubits")
    valeurs = np.array([float(phi(x)) for x in range(1 << k)])
    if not np.all(np.isfinite(valeurs)) or valeurs.min() < 0 or valeurs.max() > 1:
        raise ErreurParametres("φ doit prendre ses valeurs dans [0, 1]")

    matrice = np.zeros((2 << k, 2 << k))
    for x, p in enumerate(valeurs):
        s, r = math.sqrt(1 - p), math.sqrt(p)
        matrice[2 * x:2 * x + 2, 2 * x:2 * x + 2] = [[s, -r], [r, s]]

    circuit = remapper(preparation, range(k), k + 1).ajouter(
        porte_personnalisee(matrice), *range(k + 1)
    )
    return circuit, tuple(2 * x + 1 for x in range(1 << k))


def moyenne_monte_carlo(preparation, phi, t, medianes, rng):
    """
    Moyenne de φ sous la distribution préparée, par estimation d'amplitude
    sur l'ancilla ; médiane de `medianes` répétitions, t·medianes requêtes
    """
    circuit, bons = circuit_monte_carlo(preparation, phi)
    estimation = estimation_amplitude(circuit, bons, t, rng, repetitions=medianes)
    return ResultatMonteCarlo(mu=estimation.a_estime, requetes=estimation.requetes, estimation=estimation)


@dataclass(frozen=True)
class ResultatPente:
    pente: float
    valeurs_t: tuple
    erreurs_moyennes: tuple


def pente_erreur_monte_carlo(valeurs_t, nombre_cibles, essais, medianes, graine):
    """
    Pente log-log de l'erreur moyenne |μ̂ − μ| en fonction de t

    Les cibles sont des Bernoulli(p) avec θ = arcsin √p réparti
    régulièrement sur [π/8, 3π/8], soit un nombre entier de pas de grille
    pour toute puissance de deux t >= 8.

    Returns:
        ResultatPente: pente ajustée par moindres carrés (proche de −1)
    """
    angles = math.pi / 8 + (math.pi / 4) * (np.arange(nombre_cibles) + 0.5) / nombre_cibles
    cibles = np.sin(angles) ** 2
    vide = Circuit(1)
    erreurs = []
    for position, t in enumerate(valeurs_t):
        rng = generateur_essai(graine, position)
        cumul = 0.0
        for p in cibles:
            circuit, bons = circuit_monte_carlo(vide, lambda x, p=p: p)
            psi = propager(etat_zero(circuit.n_qubits).amplitudes, circuit)
            masque = np.zeros(psi.size, dtype=bool)
            masque[list(bons)] = True
            distribution = distribution_estimation_amplitude(psi, masque, t)
            lectures = tirer_indices(distribution, rng, essais * medianes).reshape(essais, medianes)
            estimations = np.median(np.sin(np.pi * lectures / t) ** 2, axis=1)
            cumul += float(np.mean(np.abs(estimations - p)))
        erreurs.append(cumul / len(cibles))

    regression = LinearRegression().fit(
        np.log2(np.asarray(valeurs_t, dtype=float)).reshape(-1, 1), np.log2(erreurs)
    )
    return ResultatPente(
        pente=float(regression.coef_[0]),
        valeurs_t=tuple(int(t) for t in valeurs_t),
        erreurs_moyennes=tuple(erreurs),
    )


def frequence_borne_respectee(preparation, phi, mu, t, essais, rng):
    """Proportion d'estimations (une répétition chacune) dont l'erreur respecte la borne"""
    circuit, bons = circuit_monte_carlo(preparation, phi)
    psi = propager(etat_zero(circuit.n_qubits).amplitudes, circuit)
    masque = np.zeros(psi.size, dtype=bool)
    masque[list(bons)] = True
    lectures = tirer_indices(distribution_estimation_amplitude(psi, masque, t), rng, essais)
    estimations = np.sin(np.pi * lectures / t) ** 2
    return float(np.mean(np.abs(estimations - mu) <= borne_erreur_amplitude(mu, t) + 1e-12))


# QUBO

class ProblemeQubo:
    """H0(x) = Σ Q_ij x_i x_j + Σ c_i x_i sur x ∈ {0,1}^n"""

    def __init__(self, Q, c):
        self.Q = np.array(Q, dtype=float)
        self.c = np.array(c, dtype=float).reshape(-1)
        n = self.c.size
        if self.Q.shape != (n, n):
            raise ErreurDimension(f"Q de forme {self.Q.shape} pour {n} variables")
        if not np.allclose(self.Q, self.Q.T, atol=1e-12):
            raise ErreurParametres("Q doit être symétrique")
        if not 1 <= n <= MAX_VARIABLES_QUBO:
            raise ErreurDimension(f"Énumération limitée à {MAX_VARIABLES_QUBO} variables")

    @property
    def n(self):
        return self.c.size

    def objectif(self, x):
        x = np.asarray(x, dtype=float)
        return float(x @ self.Q @ x + self.c @ x)

    @classmethod
    def depuis_dict(cls, donnees):
        return cls(donnees['Q'], donnees['c'])


@dataclass(frozen=True)
class SolutionQubo:
    x: tuple
    h0: float


def qubo_force_brute(probleme):
    """
    Minimum exhaustif par blocs vectorisés ; à égalité, le vecteur
    lexicographiquement le plus petit (x_0 en tête) l'emporte
    """
    n = probleme.n
    poids = 1 << np.arange(n - 1, -1, -1)
    meilleur_indice, meilleure_valeur = None, math.inf
    for debut in range(0, 1 << n, TAILLE_BLOC_QUBO):
        indices = np.arange(debut, min(debut + TAILLE_BLOC_QUBO, 1 << n))
        x = ((indices[:, None] & poids) > 0).astype(float)
        valeurs = np.einsum('bi,ij,bj->b', x, probleme.Q, x) + x @ probleme.c
        position = int(np.argmin(valeurs))
        if valeurs[position] < meilleure_valeur:
            meilleure_valeur = float(valeurs[position])
            meilleur_indice = int(indices[position])
    bits = tuple((meilleur_indice >> (n - 1 - i)) & 1 for i in range(n))
    return SolutionQubo(x=bits, h0=probleme.objectif(bits))


def qubo_enumeration_gray(probleme, tolerance=1e-9):
    """
    Énumération en code de Gray : un seul bit change à chaque pas et
    l'objectif est mis à jour en O(n)
    """
    n = probleme.n
    Q, c = probleme.Q, probleme.c
    x = np.zeros(n)
    valeur = 0.0
    meilleur, meilleure_valeur = tuple(x.astype(int)), 0.0
    for pas in range(1, 1 << n):
        i = n - 1 - ((pas & -pas).bit_length() - 1)
        signe = 1.0 - 2.0 * x[i]
        valeur += signe * (c[i] + Q[i, i] + 2 * (Q[i] @ x - Q[i, i] * x[i]))
        x[i] = 1.0 - x[i]
        candidat = tuple(x.astype(int))
        if valeur < meilleure_valeur - tolerance or (
            abs(valeur - meilleure_valeur) <= tolerance and candidat < meilleur
        ):
            meilleur, meilleure_valeur = candidat, valeur
    return SolutionQubo(x=meilleur, h0=probleme.objectif(meilleur))


# Interpolation de Vandermonde

@dataclass(frozen=True)
class AjustementPolynomial:
    coefficients: np.ndarray
    residus: np.ndarray
    conditionnement: float
    exact: bool


def ajustement_vandermonde(noeuds, degre):
    """
    Coefficients monomiaux c tels que V c ≈ v

    Args:
        noeuds: Couples (x, v)
        degre: Degré d du polynôme

    Returns:
        AjustementPolynomial: résolution exacte si k = d + 1,
        moindres carrés sinon

    Raises:
        ErreurConditionnement: Matrice singulière ou mal conditionnée
    """
    noeuds = np.asarray(noeuds, dtype=float)
    if noeuds.ndim != 2 or noeuds.shape[1] != 2:
        raise ErreurDimension("Les nœuds sont des couples (x, v)")
    x, v = noeuds[:, 0], noeuds[:, 1]
    if degre < 0 or x.size < degre + 1:
        raise ErreurParametres(f"{x.size} nœuds insuffisants pour un degré {degre}")
    if np.unique(x).size != x.size:
        raise ErreurConditionnement("Nœuds répétés", math.inf)

    matrice = np.vander(x, degre + 1, increasing=True)
    conditionnement = float(np.linalg.cond(matrice))
    if not math.isfinite(conditionnement) or conditionnement > SEUIL_CONDITIONNEMENT:
        raise ErreurConditionnement(
            f"Matrice de Vandermonde mal conditionnée ({conditionnement:.3e})", conditionnement
        )

    exact = x.size == degre + 1
    if exact:
        coefficients = np.linalg.solve(matrice, v)
    else:
        coefficients = np.linalg.lstsq(matrice, v, rcond=None)[0]
    return AjustementPolynomial(
        coefficients=coefficients,
        residus=v - matrice @ coefficients,
        conditionnement=conditionnement,
        exact=exact,
    )
