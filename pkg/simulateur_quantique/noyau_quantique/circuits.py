"""
Modèle de circuit : applications de portes ordonnées, exécution,
complexité en portes, oracles comptés et format texte
"""

import enum
import logging
from dataclasses import dataclass

import numpy as np

from .erreurs import (
    ErreurAnalyseCircuit,
    ErreurDimension,
    ErreurIndiceQubit,
    ErreurParametres,
    ErreurRegistres,
)
from .etats import (
    BaseMesure,
    VecteurEtat,
    appliquer_matrice,
    bits_de,
    etat_zero,
    mesurer_qubit,
    tirer_indices,
    distribution_marginale,
)
from .portes import (
    ApplicationPorte,
    Porte,
    TypePorte,
    decomposition_swap,
    decomposition_toffoli,
    matrice_de,
    porte_controlee,
    porte_rk,
)


logger = logging.getLogger(__name__)

MAX_QUBITS_MATRICE = 10
MAX_PERMUTATIONS_ORACLE = 4


@dataclass(frozen=True)
class Circuit:
    """
    Circuit sur n qubits : étapes lues de gauche à droite,
    puis mesure éventuelle des qubits déclarés
    """

    n_qubits: int
    etapes: tuple = ()
    mesure_finale: tuple = None

    def __post_init__(self):
        object.__setattr__(self, 'etapes', tuple(self.etapes))
        if not self.mesure_finale:
            object.__setattr__(self, 'mesure_finale', None)
        else:
            object.__setattr__(self, 'mesure_finale', tuple(int(q) for q in self.mesure_finale))

        if self.n_qubits < 1:
            raise ErreurDimension(f"Un circuit exige au moins un qubit ({self.n_qubits})")
        for etape in self.etapes:
            if not isinstance(etape, ApplicationPorte):
                raise ErreurParametres(f"Étape invalide : {etape!r}")
            if max(etape.cibles) >= self.n_qubits:
                raise ErreurIndiceQubit(
                    f"{etape.porte!r} sur {etape.cibles} hors d'un registre de {self.n_qubits} qubits"
                )
        if self.mesure_finale is not None:
            if len(set(self.mesure_finale)) != len(self.mesure_finale):
                raise ErreurParametres(f"Qubits mesurés répétés : {self.mesure_finale}")
            for q in self.mesure_finale:
                if not 0 <= q < self.n_qubits:
                    raise ErreurIndiceQubit(f"Qubit mesuré {q} hors du registre")

    def ajouter(self, porte, *cibles):
        """Nouveau circuit avec une étape supplémentaire"""
        return Circuit(
            self.n_qubits,
            self.etapes + (ApplicationPorte(porte, cibles),),
            self.mesure_finale,
        )

    def avec_mesure(self, *qubits):
        return Circuit(self.n_qubits, self.etapes, qubits)


@dataclass(frozen=True)
class ResultatExecution:
    """
    Attributes:
        etat_final: État après la mesure déclarée (identique à etat_avant_mesure sans mesure)
        bits: Bits lus, dans l'ordre de déclaration, ou None
        etat_avant_mesure: État unitaire juste avant la mesure
    """

    etat_final: VecteurEtat
    bits: str
    etat_avant_mesure: VecteurEtat


@dataclass(frozen=True)
class ComplexitePortes:
    nombre_portes_elementaires: int = 0

    def __add__(self, autre):
        return ComplexitePortes(self.nombre_portes_elementaires + autre.nombre_portes_elementaires)


def propager(amplitudes, circuit):
    """Applique les étapes unitaires d'un circuit à un tableau d'amplitudes"""
    for etape in circuit.etapes:
        amplitudes = appliquer_matrice(
            amplitudes, matrice_de(etape.porte), etape.cibles, circuit.n_qubits
        )
    return amplitudes


def _verifier_initial(circuit, initial):
    if initial is None:
        return etat_zero(circuit.n_qubits)
    if initial.n_qubits != circuit.n_qubits:
        raise ErreurDimension(
            f"État initial de {initial.n_qubits} qubits pour un circuit de {circuit.n_qubits}"
        )
    return initial


def executer(circuit, initial=None, rng=None):
    """
    Exécute un circuit puis mesure les qubits déclarés

    Args:
        circuit: Circuit à exécuter
        initial: État initial (|0…0⟩ par défaut)
        rng: Générateur numpy, requis si le circuit comporte une mesure

    Returns:
        ResultatExecution
    """
    initial = _verifier_initial(circuit, initial)
    avant_mesure = VecteurEtat(propager(initial.amplitudes, circuit))

    if not circuit.mesure_finale:
        return ResultatExecution(avant_mesure, None, avant_mesure)
    if rng is None:
        raise ErreurParametres("Un générateur est requis pour mesurer")

    etat = avant_mesure
    bits = []
    for q in circuit.mesure_finale:
        resultat = mesurer_qubit(etat, q, BaseMesure.CALCUL, rng)
        bits.append(resultat.bits)
        etat = resultat.etat_post
    return ResultatExecution(etat, ''.join(bits), avant_mesure)


def executer_tirs(circuit, nombre_tirs, rng, initial=None):
    """
    Répète un circuit mesuré : l'état avant mesure est simulé une fois,
    puis les lectures sont tirées selon sa distribution marginale

    Returns:
        list: Chaînes de bits, une par tir
    """
    if not circuit.mesure_finale:
        raise ErreurParametres("Le circuit ne déclare aucune mesure")
    initial = _verifier_initial(circuit, initial)
    amplitudes = propager(initial.amplitudes, circuit)
    distribution = distribution_marginale(amplitudes, circuit.mesure_finale, circuit.n_qubits)
    indices = tirer_indices(distribution, rng, nombre_tirs)
    largeur = len(circuit.mesure_finale)
    return [bits_de(indice, largeur) for indice in indices]


def nombre_portes(circuit, base_elementaire=False):
    """
    Complexité en portes ; avec base_elementaire, Toffoli et SWAP sont
    comptés selon leurs décompositions à deux qubits
    """
    if not base_elementaire:
        return ComplexitePortes(len(circuit.etapes))

    total = 0
    for etape in circuit.etapes:
        if etape.porte.type is TypePorte.TOFFOLI:
            total += len(decomposition_toffoli())
        elif etape.porte.type is TypePorte.SWAP:
            total += len(decomposition_swap())
        else:
            total += 1
    return ComplexitePortes(total)


def concatener(premier, second):
    if premier.n_qubits != second.n_qubits:
        raise ErreurDimension("Concaténation de circuits de tailles différentes")
    return Circuit(premier.n_qubits, premier.etapes + second.etapes, second.mesure_finale)


def circuit_adjoint(circuit):
    """Étapes inversées et adjointes ; la mesure n'est pas reprise"""
    etapes = tuple(
        ApplicationPorte(etape.porte.adjointe(), etape.cibles)
        for etape in reversed(circuit.etapes)
    )
    return Circuit(circuit.n_qubits, etapes)


def remapper(circuit, qubits, n_total):
    """Plonge un circuit dans un registre plus grand : qubit i ↦ qubits[i]"""
    qubits = tuple(qubits)
    if len(qubits) != circuit.n_qubits:
        raise ErreurDimension(
            f"{len(qubits)} qubits fournis pour un circuit de {circuit.n_qubits}"
        )
    etapes = tuple(
        ApplicationPorte(etape.porte, tuple(qubits[q] for q in etape.cibles))
        for etape in circuit.etapes
    )
    mesure = None
    if circuit.mesure_finale is not None:
        mesure = tuple(qubits[q] for q in circuit.mesure_finale)
    return Circuit(n_total, etapes, mesure)


def matrice_circuit(circuit):
    """Unitaire composé, colonne par colonne (limité à 10 qubits)"""
    if circuit.n_qubits > MAX_QUBITS_MATRICE:
        raise ErreurDimension(f"Matrice composée limitée à {MAX_QUBITS_MATRICE} qubits")
    dimension = 1 << circuit.n_qubits
    colonnes = np.eye(dimension, dtype=np.complex128)
    return np.column_stack([propager(colonnes[:, j], circuit) for j in range(dimension)])


class ModeOracle(enum.Enum):
    XOR = 'xor'
    ADDITION = 'addition'


def _lire_registre(indices, qubits, n_qubits):
    valeur = np.zeros_like(indices)
    for q in qubits:
        valeur = (valeur << 1) | ((indices >> (n_qubits - 1 - q)) & 1)
    return valeur


class Oracle:
    """
    Boîte noire |x, y⟩ → |x, y ⊕ f(x)⟩ (ou y + f(x) mod 2^m) dont chaque
    application incrémente compteur_requetes

    Args:
        bits_entree: Taille du registre x
        bits_sortie: Taille du registre y
        fonction: f : int → int, à valeurs dans [0, 2^bits_sortie)
        mode: ModeOracle.XOR ou ModeOracle.ADDITION
    """

    def __init__(self, bits_entree, bits_sortie, fonction, mode=ModeOracle.XOR):
        if bits_entree < 1 or bits_sortie < 1:
            raise ErreurRegistres("Les registres d'un oracle ont au moins un qubit")
        self.bits_entree = bits_entree
        self.bits_sortie = bits_sortie
        self.fonction = fonction
        self.mode = mode
        self.compteur_requetes = 0
        self._table = None
        self._permutations = {}

    def table(self):
        """Valeurs f(x) pour toutes les entrées (description classique, non comptée)"""
        if self._table is None:
            valeurs = np.array(
                [int(self.fonction(x)) for x in range(1 << self.bits_entree)], dtype=np.int64
            )
            if valeurs.min() < 0 or valeurs.max() >= 1 << self.bits_sortie:
                raise ErreurParametres(
                    f"f sort de [0, 2^{self.bits_sortie}) : valeurs dans "
                    f"[{valeurs.min()}, {valeurs.max()}]"
                )
            self._table = valeurs
        return self._table

    def _verifier_registres(self, registres_entree, registres_sortie, n_qubits):
        if len(registres_entree) != self.bits_entree or len(registres_sortie) != self.bits_sortie:
            raise ErreurRegistres(
                f"Arité ({len(registres_entree)}, {len(registres_sortie)}) au lieu de "
                f"({self.bits_entree}, {self.bits_sortie})"
            )
        tous = list(registres_entree) + list(registres_sortie)
        if len(set(tous)) != len(tous):
            raise ErreurRegistres(f"Registres qui se chevauchent : {tous}")
        if min(tous) < 0 or max(tous) >= n_qubits:
            raise ErreurIndiceQubit(f"Registres {tous} hors d'un état de {n_qubits} qubits")

    def permutation(self, n_qubits, registres_entree, registres_sortie):
        """Destination de chaque indice de base sous l'action de l'oracle"""
        cle = (n_qubits, tuple(registres_entree), tuple(registres_sortie))
        if cle in self._permutations:
            return self._permutations[cle]
        if len(self._permutations) >= MAX_PERMUTATIONS_ORACLE:
            del self._permutations[next(iter(self._permutations))]

        indices = np.arange(1 << n_qubits, dtype=np.int64)
        x = _lire_registre(indices, registres_entree, n_qubits)
        y = _lire_registre(indices, registres_sortie, n_qubits)
        fx = self.table()[x]
        if self.mode is ModeOracle.XOR:
            nouveau_y = y ^ fx
        else:
            nouveau_y = (y + fx) % (1 << self.bits_sortie)

        destinations = indices.copy()
        for position, q in enumerate(registres_sortie):
            decalage = n_qubits - 1 - q
            bit = (nouveau_y >> (self.bits_sortie - 1 - position)) & 1
            destinations = (destinations & ~(1 << decalage)) | (bit << decalage)

        self._permutations[cle] = destinations
        return destinations

    def appliquer_amplitudes(self, amplitudes, n_qubits, registres_entree, registres_sortie):
        self._verifier_registres(registres_entree, registres_sortie, n_qubits)
        destinations = self.permutation(n_qubits, registres_entree, registres_sortie)
        resultat = np.empty_like(amplitudes)
        resultat[destinations] = amplitudes
        self.compteur_requetes += 1
        return resultat

    def appliquer(self, etat, registres_entree, registres_sortie):
        """
        Applique la permutation induite à un état

        Returns:
            VecteurEtat: Nouvel état
        """
        return VecteurEtat(
            self.appliquer_amplitudes(
                etat.amplitudes, etat.n_qubits, registres_entree, registres_sortie
            )
        )

    def matrice_permutation(self):
        """Matrice de l'oracle sur ses propres registres (x puis y), non comptée"""
        n_qubits = self.bits_entree + self.bits_sortie
        if n_qubits > MAX_QUBITS_MATRICE:
            raise ErreurDimension(f"Matrice d'oracle limitée à {MAX_QUBITS_MATRICE} qubits")
        destinations = self.permutation(
            n_qubits, range(self.bits_entree), range(self.bits_entree, n_qubits)
        )
        matrice = np.zeros((1 << n_qubits, 1 << n_qubits))
        matrice[destinations, np.arange(1 << n_qubits)] = 1.0
        return matrice


class OracleClassique:
    """Fonction réelle dont chaque évaluation est comptée"""

    def __init__(self, fonction):
        self.fonction = fonction
        self.compteur_requetes = 0

    def __call__(self, x):
        self.compteur_requetes += 1
        return self.fonction(x)


# Format texte

_JETONS_SIMPLES = {
    'I': Porte(TypePorte.I),
    'X': Porte(TypePorte.X),
    'Y': Porte(TypePorte.Y),
    'Z': Porte(TypePorte.Z),
    'H': Porte(TypePorte.H),
    'S': Porte(TypePorte.S),
    'T': Porte(TypePorte.T),
    'SDG': Porte(TypePorte.S, dague=True),
    'TDG': Porte(TypePorte.T, dague=True),
    'CNOT': Porte(TypePorte.CNOT),
    'SWAP': Porte(TypePorte.SWAP),
    'CCX': Porte(TypePorte.TOFFOLI),
}
_NOMS_SIMPLES = {porte: jeton for jeton, porte in _JETONS_SIMPLES.items()}
_JETONS_PARAMETRES = {'RK', 'RKDG', 'CRK', 'CRKDG'}


def _jeton_porte(porte):
    if porte in _NOMS_SIMPLES:
        return _NOMS_SIMPLES[porte], []
    if porte.type is TypePorte.RK:
        return ('RKDG' if porte.dague else 'RK'), [porte.k]
    if porte.type is TypePorte.CONTROLEE and porte.interne.type is TypePorte.RK:
        return ('CRKDG' if porte.interne.dague else 'CRK'), [porte.interne.k]
    raise ErreurAnalyseCircuit(f"Porte sans représentation texte : {porte!r}")


def serialiser(circuit):
    """
    Format ligne à ligne : QUBITS n, une porte par ligne, MEASURE en dernier

    Returns:
        str: Texte terminé par un saut de ligne
    """
    lignes = [f"QUBITS {circuit.n_qubits}"]
    for etape in circuit.etapes:
        jeton, parametres = _jeton_porte(etape.porte)
        lignes.append(' '.join([jeton] + [str(v) for v in parametres + list(etape.cibles)]))
    if circuit.mesure_finale:
        lignes.append(' '.join(['MEASURE'] + [str(q) for q in circuit.mesure_finale]))
    return '\n'.join(lignes) + '\n'


def _entier(jeton, numero_ligne):
    if not (jeton.isascii() and jeton.isdecimal()):
        raise ErreurAnalyseCircuit("entier décimal attendu", numero_ligne, jeton)
    return int(jeton)


def deserialiser(texte):
    """
    Lit le format texte produit par serialiser()

    Raises:
        ErreurAnalyseCircuit: Avec numéro de ligne et jeton fautif
    """
    n_qubits = None
    etapes = []
    mesure = None

    for numero_ligne, ligne in enumerate(texte.split('\n'), start=1):
        ligne = ligne.strip()
        if not ligne or ligne.startswith('#'):
            continue
        jetons = ligne.split()
        commande, arguments = jetons[0], jetons[1:]

        if commande == 'QUBITS':
            if n_qubits is not None:
                raise ErreurAnalyseCircuit("QUBITS déclaré deux fois", numero_ligne, commande)
            if len(arguments) != 1:
                raise ErreurAnalyseCircuit("QUBITS attend un entier", numero_ligne, commande)
            n_qubits = _entier(arguments[0], numero_ligne)
            continue

        if n_qubits is None:
            raise ErreurAnalyseCircuit("QUBITS doit précéder les portes", numero_ligne, commande)
        if mesure is not None:
            raise ErreurAnalyseCircuit("MEASURE doit être la dernière ligne", numero_ligne, commande)

        valeurs = [_entier(argument, numero_ligne) for argument in arguments]
        for position, (argument, valeur) in enumerate(zip(arguments, valeurs)):
            est_parametre = commande in _JETONS_PARAMETRES and position == 0
            if not est_parametre and valeur >= n_qubits:
                raise ErreurAnalyseCircuit(
                    f"qubit hors du registre de {n_qubits}", numero_ligne, argument
                )

        if commande == 'MEASURE':
            if not valeurs:
                raise ErreurAnalyseCircuit("MEASURE sans qubit", numero_ligne, commande)
            mesure = tuple(valeurs)
            continue

        if commande in _JETONS_SIMPLES:
            porte = _JETONS_SIMPLES[commande]
        elif commande in _JETONS_PARAMETRES:
            if not valeurs or valeurs[0] < 1:
                raise ErreurAnalyseCircuit("k >= 1 attendu", numero_ligne, commande)
            interne = porte_rk(valeurs[0], dague=commande.endswith('DG'))
            porte = porte_controlee(interne) if commande.startswith('C') else interne
            valeurs = valeurs[1:]
        else:
            raise ErreurAnalyseCircuit("porte inconnue", numero_ligne, commande)

        try:
            etapes.append(ApplicationPorte(porte, tuple(valeurs)))
        except ErreurParametres as erreur:
            raise ErreurAnalyseCircuit(str(erreur), numero_ligne, commande) from erreur

    if n_qubits is None:
        raise ErreurAnalyseCircuit("déclaration QUBITS absente", 0, '')
    try:
        return Circuit(n_qubits, etapes, mesure)
    except (ErreurParametres, ErreurDimension) as erreur:
        raise ErreurAnalyseCircuit(str(erreur), 0, 'QUBITS') from erreur
