"""
Monnaie quantique : schéma de Wiesner, politiques de la banque, attaques
par mesure et attaque adaptative, jeu de sécurité, impossibilité du
clonage et schéma jouet de monnaie « éclair »
"""

import abc
import enum
import logging
from dataclasses import dataclass, replace

import numpy as np

from .circuits import ModeOracle, Oracle
from .erreurs import ErreurDimension, ErreurParametres, ErreurSerieInconnue
from .essais import executer_essais
from .etats import (
    KET_0,
    KET_1,
    KET_MOINS,
    KET_PLUS,
    BaseMesure,
    VecteurEtat,
    appliquer_porte,
    distribution_marginale,
    fidelite,
    mesurer_qubit,
    produit_tensoriel,
    tirer_indices,
)
from .portes import MATRICE_H, MATRICE_X, PORTE_CNOT, matrice_de


logger = logging.getLogger(__name__)

MAX_QUBITS_BILLET = 64
MAX_QUBITS_ECLAIR = 10

_ENCODAGE = {
    (0, 0): KET_0,
    (1, 0): KET_1,
    (0, 1): KET_PLUS,
    (1, 1): KET_MOINS,
}

_BASES = (BaseMesure.CALCUL, BaseMesure.HADAMARD)


class PolitiqueBanque(enum.Enum):
    """Ce que la banque rend après une vérification"""

    RETOUR_TOUJOURS = 'return-always'
    RETOUR_SI_VALIDE = 'return-on-valid'
    REEMISSION_SI_VALIDE = 'reissue'


class Verdict(enum.Enum):
    VALIDE = 'VALID'
    INVALIDE = 'INVALID'


@dataclass(frozen=True)
class BilletWiesner:
    """Numéro de série et qubits du billet, stockés sous forme produit"""

    serie: str
    qubits: tuple

    def __post_init__(self):
        object.__setattr__(self, 'qubits', tuple(self.qubits))

    @property
    def n(self):
        return len(self.qubits)

    def remplacer(self, indice, etat):
        qubits = list(self.qubits)
        qubits[indice] = etat
        return replace(self, qubits=qubits)

    def appliquer(self, indice, matrice):
        """Applique une porte à un qubit du billet"""
        return self.remplacer(indice, appliquer_porte(self.qubits[indice], matrice, (0,)))


@dataclass(frozen=True)
class EnregistrementBanque:
    """
    Secret de la banque pour un billet

    Attributes:
        serie: Numéro de série
        bits: Bits du billet
        bases: 0 pour la base de calcul, 1 pour la base de Hadamard
    """

    serie: str
    bits: str
    bases: str


@dataclass(frozen=True)
class ReponseVerification:
    verdict: Verdict
    billet: BilletWiesner = None

    @property
    def valide(self):
        return self.verdict is Verdict.VALIDE


def encoder_qubit(bit, base):
    """00 → |0⟩, 10 → |1⟩, 01 → |+⟩, 11 → |−⟩ pour le couple (bit, base)"""
    return _ENCODAGE[(int(bit), int(base))]


def _tirer_chaine(n, rng):
    return ''.join(str(int(b)) for b in rng.integers(0, 2, size=n))


def _verifier_taille(n):
    if not 1 <= n <= MAX_QUBITS_BILLET:
        raise ErreurDimension(f"Un billet compte de 1 à {MAX_QUBITS_BILLET} qubits ({n})")


def emettre_wiesner(n, rng, serie, bits=None, bases=None):
    """
    Tire n couples (bit, base) et encode le billet correspondant

    Args:
        n: Nombre de qubits
        rng: Générateur numpy
        serie: Numéro de série attribué
        bits: Bits imposés (tirés sinon)
        bases: Bases imposées (tirées sinon)

    Returns:
        tuple: (BilletWiesner, EnregistrementBanque)
    """
    _verifier_taille(n)
    bits = _tirer_chaine(n, rng) if bits is None else bits
    bases = _tirer_chaine(n, rng) if bases is None else bases
    for chaine in (bits, bases):
        if len(chaine) != n or set(chaine) - {'0', '1'}:
            raise ErreurParametres(f"Chaîne de {n} bits attendue : {chaine!r}")
    qubits = [encoder_qubit(b, base) for b, base in zip(bits, bases)]
    return BilletWiesner(serie, qubits), EnregistrementBanque(serie, bits, bases)


class Banque:
    """
    Banque émettrice : garde les enregistrements secrets et vérifie les
    billets selon sa politique de retour

    Args:
        politique: PolitiqueBanque
    """

    def __init__(self, politique=PolitiqueBanque.RETOUR_TOUJOURS):
        self.politique = PolitiqueBanque(politique)
        self._enregistrements = {}
        self._compteur = 0
        self.appels_verification = 0

    def _nouvelle_serie(self):
        self._compteur += 1
        return f"W{self._compteur:08d}"

    def emettre(self, n, rng, bits=None, bases=None):
        billet, enregistrement = emettre_wiesner(n, rng, self._nouvelle_serie(), bits, bases)
        self._enregistrements[billet.serie] = enregistrement
        return billet

    def enregistrement_secret(self, serie):
        """Accès réservé aux tests et au rapport d'expérience"""
        if serie not in self._enregistrements:
            raise ErreurSerieInconnue(f"Numéro de série inconnu : {serie}")
        return self._enregistrements[serie]

    def verifier(self, billet, rng):
        """
        Mesure chaque qubit dans la base enregistrée

        Returns:
            ReponseVerification: VALIDE si toutes les lectures concordent ;
            le billet rendu dépend de la politique
        """
        enregistrement = self.enregistrement_secret(billet.serie)
        self.appels_verification += 1
        n = len(enregistrement.bits)

        if billet.n != n:
            verdict, qubits = Verdict.INVALIDE, billet.qubits
        else:
            qubits, concordants = [], True
            for qubit, bit, base in zip(billet.qubits, enregistrement.bits, enregistrement.bases):
                mesure = mesurer_qubit(qubit, 0, _BASES[int(base)], rng)
                qubits.append(mesure.etat_post)
                concordants = concordants and mesure.bits == bit
            verdict = Verdict.VALIDE if concordants else Verdict.INVALIDE

        if self.politique is PolitiqueBanque.RETOUR_TOUJOURS:
            return ReponseVerification(verdict, BilletWiesner(billet.serie, qubits))
        if verdict is Verdict.INVALIDE:
            return ReponseVerification(verdict)
        if self.politique is PolitiqueBanque.RETOUR_SI_VALIDE:
            return ReponseVerification(verdict, BilletWiesner(billet.serie, qubits))

        nouveau, enregistrement = emettre_wiesner(n, rng, billet.serie)
        self._enregistrements[billet.serie] = enregistrement
        return ReponseVerification(verdict, nouveau)


def espionner_qubit(billet, indice, base, rng):
    """Mesure d'un qubit par un tiers ; le billet garde l'état effondré"""
    mesure = mesurer_qubit(billet.qubits[indice], 0, BaseMesure(base), rng)
    return billet.remplacer(indice, mesure.etat_post)


def billet_aleatoire(serie, n, rng):
    """Contrefaçon dont chaque qubit est un état de BB84 tiré au hasard"""
    _verifier_taille(n)
    couples = rng.integers(0, 2, size=(n, 2))
    return BilletWiesner(serie, [encoder_qubit(b, base) for b, base in couples])


# Attaques

def attaque_devine_mesure(billet, rng):
    """
    Devine une base par qubit, mesure, puis prépare deux copies de l'état lu

    Returns:
        tuple: Deux BilletWiesner portant le numéro de série original
    """
    qubits = []
    for qubit in billet.qubits:
        base = int(rng.integers(0, 2))
        bit = mesurer_qubit(qubit, 0, _BASES[base], rng).bits
        qubits.append(encoder_qubit(bit, base))
    return BilletWiesner(billet.serie, qubits), BilletWiesner(billet.serie, qubits)


@dataclass(frozen=True)
class ResultatAttaqueAdaptative:
    """
    Attributes:
        bits: Bits reconstitués (None pour un qubit non atteint)
        bases: Bases reconstituées
        appels_verification: Vérifications demandées à la banque
        interrompue: La banque a confisqué le billet
        billet: Dernier billet détenu par l'attaquant
    """

    bits: str
    bases: str
    appels_verification: int
    interrompue: bool
    billet: BilletWiesner = None

    @property
    def complete(self):
        return not self.interrompue and '?' not in self.bits

    def correspond(self, enregistrement):
        return self.bits == enregistrement.bits and self.bases == enregistrement.bases


def attaque_adaptative(guichet, billet, rng):
    """
    Sonde chaque qubit par X_i : un verdict INVALIDE révèle la base de
    calcul (le qubit rendu est restauré par X puis lu en Z), un verdict
    VALIDE la base de Hadamard (lecture en base ±). Une dernière
    vérification confirme le billet restauré : n + 1 appels au total.

    Args:
        guichet: Objet exposant verifier(billet, rng), Banque ou GuichetVerification
        billet: Billet détenu
        rng: Générateur numpy

    Returns:
        ResultatAttaqueAdaptative: l'échec face à une banque qui
        confisque est un résultat, pas une exception
    """
    n = billet.n
    bits, bases = ['?'] * n, ['?'] * n
    appels = 0
    courant = billet

    for i in range(n):
        reponse = guichet.verifier(courant.appliquer(i, MATRICE_X), rng)
        appels += 1
        if reponse.billet is None:
            logger.debug("Billet %s confisqué au qubit %d", billet.serie, i)
            return ResultatAttaqueAdaptative(''.join(bits), ''.join(bases), appels, True)

        courant = reponse.billet.appliquer(i, MATRICE_X)
        base = BaseMesure.CALCUL if reponse.verdict is Verdict.INVALIDE else BaseMesure.HADAMARD
        mesure = mesurer_qubit(courant.qubits[i], 0, base, rng)
        courant = courant.remplacer(i, mesure.etat_post)
        bits[i] = mesure.bits
        bases[i] = '0' if base is BaseMesure.CALCUL else '1'

    reponse = guichet.verifier(courant, rng)
    appels += 1
    interrompue = reponse.billet is None
    return ResultatAttaqueAdaptative(
        ''.join(bits), ''.join(bases), appels, interrompue, reponse.billet
    )


def fabriquer_copie(serie, bits, bases):
    """Billet neuf à partir d'une description reconstituée"""
    return BilletWiesner(serie, [encoder_qubit(b, base) for b, base in zip(bits, bases)])


# Jeu de sécurité

class GuichetVerification:
    """Accès de l'adversaire à la banque, avec compteur d'appels"""

    def __init__(self, banque):
        self._banque = banque
        self.appels = 0

    def verifier(self, billet, rng):
        self.appels += 1
        return self._banque.verifier(billet, rng)


class Adversaire(abc.ABC):
    """Reçoit n billets et rend m candidats à la vérification"""

    nom = None

    @abc.abstractmethod
    def forger(self, billets, guichet, m, rng):
        """
        Args:
            billets: Billets remis par le challenger
            guichet: GuichetVerification
            m: Nombre de billets à soumettre
            rng: Générateur numpy

        Returns:
            list: Au plus m BilletWiesner
        """


class AdversaireHonnete(Adversaire):
    nom = 'honnete'

    def forger(self, billets, guichet, m, rng):
        return list(billets)[:m]


class AdversaireDevineMesure(Adversaire):
    nom = 'devine-mesure'

    def forger(self, billets, guichet, m, rng):
        candidats = []
        for billet in billets:
            candidats.extend(attaque_devine_mesure(billet, rng))
        return candidats[:m]


class AdversaireAdaptatif(Adversaire):
    nom = 'adaptatif'

    def forger(self, billets, guichet, m, rng):
        descriptions, restants = [], []
        for billet in billets:
            resultat = attaque_adaptative(guichet, billet, rng)
            if resultat.complete:
                descriptions.append((billet.serie, resultat.bits, resultat.bases))
            elif resultat.billet is not None:
                restants.append(resultat.billet)
        if not descriptions:
            return restants[:m]
        candidats = [
            fabriquer_copie(*descriptions[i % len(descriptions)]) for i in range(m)
        ]
        return candidats


ADVERSAIRES = {
    classe.nom: classe
    for classe in (AdversaireHonnete, AdversaireDevineMesure, AdversaireAdaptatif)
}


@dataclass(frozen=True)
class ResultatJeu:
    victoires: int
    essais: int
    succes_moyens: float

    @property
    def frequence(self):
        return self.victoires / self.essais if self.essais else 0.0


def _partie(adversaire, n_billets, m_soumissions, politique, taille_billet, rng):
    banque = Banque(politique)
    billets = [banque.emettre(taille_billet, rng) for _ in range(n_billets)]
    candidats = adversaire.forger(billets, GuichetVerification(banque), m_soumissions, rng)
    succes = sum(banque.verifier(c, rng).valide for c in candidats[:m_soumissions])
    return succes


def jeu_securite(
    adversaire,
    n_billets,
    m_soumissions,
    essais,
    graine,
    politique=PolitiqueBanque.REEMISSION_SI_VALIDE,
    taille_billet=5,
    n_jobs=1,
):
    """
    Partie répétée : le challenger émet n billets, l'adversaire soumet
    m candidats ; il gagne si plus de n sont acceptés

    Returns:
        ResultatJeu
    """
    if n_billets < 1 or m_soumissions < 1 or essais < 1:
        raise ErreurParametres("n, m et le nombre d'essais doivent être positifs")
    politique = PolitiqueBanque(politique)

    succes = executer_essais(
        lambda rng: _partie(adversaire, n_billets, m_soumissions, politique, taille_billet, rng),
        graine,
        essais,
        n_jobs=n_jobs,
    )
    victoires = sum(1 for s in succes if s > n_billets)
    logger.info(
        "Jeu de sécurité (%s, %s) : %d victoire(s) sur %d", adversaire.nom, politique.value, victoires, essais
    )
    return ResultatJeu(victoires, essais, float(np.mean(succes)))


# Impossibilité du clonage

def copieur_cnot(etat):
    """CNOT(|φ⟩ ⊗ |0⟩) : copie les états de base, intrique les superpositions"""
    if etat.n_qubits != 1:
        raise ErreurDimension("Le copieur agit sur un qubit")
    return appliquer_porte(produit_tensoriel(etat, KET_0), matrice_de(PORTE_CNOT), (0, 1))


def fidelite_clonage(etat):
    """|⟨φφ|CNOT(φ ⊗ 0)⟩|² = |α|⁴ + |β|⁴"""
    return fidelite(copieur_cnot(etat), produit_tensoriel(etat, etat))


# Monnaie éclair (instanciation jouet)

class SchemaEclair:
    """
    Ensemble G = {0, …, 2^k − 1}, invariant f : G → P et mouvements
    (permutations de G qui préservent f)

    Args:
        k: Nombre de qubits du registre G
        fonction: f : int → int positif
        mouvements: Suites s avec s[g] image de g
    """

    def __init__(self, k, fonction, mouvements):
        if not 1 <= k <= MAX_QUBITS_ECLAIR:
            raise ErreurDimension(f"Registre G limité à {MAX_QUBITS_ECLAIR} qubits ({k})")
        self.k = k
        self.fonction = fonction
        self.valeurs = np.array([int(fonction(g)) for g in range(1 << k)], dtype=np.int64)
        if self.valeurs.min() < 0:
            raise ErreurParametres("L'invariant doit être positif")
        self.bits_sortie = max(1, int(self.valeurs.max()).bit_length())

        if not mouvements:
            raise ErreurParametres("Au moins un mouvement est requis")
        self.mouvements = []
        for mouvement in mouvements:
            mouvement = np.asarray(mouvement, dtype=np.int64)
            if sorted(mouvement.tolist()) != list(range(1 << k)):
                raise ErreurParametres("Un mouvement doit être une permutation de G")
            if np.any(self.valeurs[mouvement] != self.valeurs):
                raise ErreurParametres("Un mouvement doit préserver l'invariant")
            self.mouvements.append(mouvement)

    @property
    def taille(self):
        return 1 << self.k

    def preimage(self, p):
        return np.flatnonzero(self.valeurs == p)


def schema_jouet(k, modulo):
    """
    f(g) = g mod M ; mouvements : translation g ↦ g + M et
    transposition de 0 et M (identité seule si M = 2^k)
    """
    taille = 1 << k
    if modulo < 1 or taille % modulo:
        raise ErreurParametres(f"M={modulo} doit diviser 2^{k}")
    if modulo == taille:
        return SchemaEclair(k, lambda g: g % modulo, [np.arange(taille)])

    translation = (np.arange(taille) + modulo) % taille
    transposition = np.arange(taille)
    transposition[[0, modulo]] = transposition[[modulo, 0]]
    return SchemaEclair(k, lambda g: g % modulo, [translation, transposition])


def emettre_eclair(schema, rng):
    """
    Superposition uniforme sur G, calcul de f dans un second registre,
    mesure de ce registre

    Returns:
        tuple: (p, VecteurEtat uniforme sur f⁻¹(p))
    """
    k, b = schema.k, schema.bits_sortie
    total = k + b
    oracle = Oracle(k, b, lambda g: schema.valeurs[g], ModeOracle.XOR)

    amplitudes = np.zeros(1 << total, dtype=np.complex128)
    amplitudes[np.arange(schema.taille) << b] = 1 / np.sqrt(schema.taille)
    amplitudes = oracle.appliquer_amplitudes(amplitudes, total, tuple(range(k)), tuple(range(k, total)))

    p = tirer_indices(distribution_marginale(amplitudes, tuple(range(k, total)), total), rng)
    billet = amplitudes.reshape(schema.taille, 1 << b)[:, p]
    return p, VecteurEtat(billet / np.linalg.norm(billet))


@dataclass(frozen=True)
class ResultatVerificationEclair:
    accepte: bool
    tours_reussis: int


def verifier_eclair(schema, p, etat, tours, rng):
    """
    Chaque tour : ancilla |+⟩, permutation du mouvement contrôlée par
    l'ancilla, mesure de l'ancilla en base ± ; acceptation si tous les
    tours lisent +

    La valeur p n'est pas contrôlée : seul l'invariance par les
    mouvements est testée.
    """
    if etat.n_qubits != schema.k:
        raise ErreurDimension(f"Billet de {etat.n_qubits} qubits pour un registre de {schema.k}")
    if tours < 1:
        raise ErreurParametres("Au moins un tour de vérification")

    courant = etat.amplitudes
    for tour in range(tours):
        mouvement = schema.mouvements[tour % len(schema.mouvements)]
        deplace = np.empty_like(courant)
        deplace[mouvement] = courant
        controle = VecteurEtat(np.concatenate([courant, deplace]) / np.sqrt(2))
        mesure = mesurer_qubit(controle, 0, BaseMesure.HADAMARD, rng)
        if mesure.bits != '0':
            return ResultatVerificationEclair(False, tour)
        registre = appliquer_porte(mesure.etat_post, MATRICE_H, (0,)).amplitudes[: schema.taille]
        courant = registre / np.linalg.norm(registre)
    return ResultatVerificationEclair(True, tours)
