"""
Nombres aléatoires : générateur congruentiel linéaire, générateur
quantique simulé (H puis mesure) et tests d'uniformité
"""

import enum
import logging
import math
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy import stats

from .circuits import Circuit, executer, executer_tirs
from .erreurs import ErreurParametres
from .essais import generateur
from .portes import PORTE_H, ApplicationPorte


logger = logging.getLogger(__name__)

TAILLE_MINIMALE_RAPPORT = 500
DECALAGES_AUTOCORRELATION = range(1, 17)
NOMBRE_CLASSES = 16
SEUIL_KHI2 = 0.01
FENETRE_PERIODE = 4096
RECOUVREMENT_PERIODE = 64
BITS_PAR_VALEUR_QRNG = 8
BITS_PAR_LIGNE_HEX = 64


@dataclass(frozen=True)
class ParametresLCG:
    """X_(n+1) = (a X_n + c) mod m avec m > 0, 0 <= a < m et 0 <= c < m"""

    a: int
    c: int
    m: int

    def __post_init__(self):
        if self.m <= 0:
            raise ErreurParametres(f"Module m={self.m} non positif")
        if not 0 <= self.a < self.m or not 0 <= self.c < self.m:
            raise ErreurParametres(f"Paramètres hors bornes : a={self.a}, c={self.c}, m={self.m}")


LCG_STANDARD_MINIMAL = ParametresLCG(a=7 ** 5, c=0, m=2 ** 31 - 1)
LCG_MAUVAIS = ParametresLCG(a=205, c=57, m=256)

PRESETS_LCG = {
    'minimal': LCG_STANDARD_MINIMAL,
    'mauvais': LCG_MAUVAIS,
}


def lcg_suivant(parametres, x):
    """Un pas de la récurrence, en entiers Python (pas de débordement)"""
    if not 0 <= x < parametres.m:
        raise ErreurParametres(f"État {x} hors de [0, {parametres.m})")
    return (parametres.a * int(x) + parametres.c) % parametres.m


def suite_lcg(parametres, graine, nombre):
    """Les `nombre` états qui suivent la graine"""
    valeurs = np.empty(nombre, dtype=np.int64)
    x = int(graine)
    for i in range(nombre):
        x = lcg_suivant(parametres, x)
        valeurs[i] = x
    return valeurs


def premier_retour(parametres, graine, fenetre):
    """Rang auquel la graine réapparaît dans la fenêtre, None sinon"""
    x = int(graine)
    for rang in range(1, fenetre + 1):
        x = lcg_suivant(parametres, x)
        if x == graine:
            return rang
    return None


CIRCUIT_QRNG = Circuit(1, [ApplicationPorte(PORTE_H, (0,))], mesure_finale=(0,))


def etat_qrng():
    """État avant mesure du générateur quantique : |+⟩"""
    return executer(Circuit(1, CIRCUIT_QRNG.etapes)).etat_final


def bit_qrng(rng):
    """
    Un bit du circuit H puis mesure, exécuté sur le simulateur

    Le tirage du simulateur tient lieu d'aléa physique : c'est une
    simulation de générateur quantique, pas une source d'entropie.
    """
    return int(executer(CIRCUIT_QRNG, rng=rng).bits)


class SourceFlux(enum.Enum):
    LCG = 'lcg'
    QRNG = 'qrng'


class FluxBits:
    """
    Flux rejouable à partir de (source, graine)

    Args:
        source: SourceFlux
        graine: Graine du LCG (état initial) ou du tirage du simulateur
        parametres: ParametresLCG pour la source LCG
    """

    def __init__(self, source, graine, parametres=LCG_STANDARD_MINIMAL):
        self.source = SourceFlux(source)
        self.graine = int(graine)
        self.parametres = parametres
        self.emis = 0
        if self.source is SourceFlux.LCG:
            self._etat = self.graine % parametres.m
        else:
            self._rng = generateur(self.graine)

    def entiers(self, nombre):
        """États bruts du LCG, ou bits pour la source quantique"""
        if self.source is SourceFlux.LCG:
            valeurs = suite_lcg(self.parametres, self._etat, nombre)
            if nombre:
                self._etat = int(valeurs[-1])
        else:
            valeurs = np.array(
                [int(b) for b in executer_tirs(CIRCUIT_QRNG, nombre, self._rng)], dtype=np.int64
            )
        self.emis += nombre
        return valeurs

    def bits(self, nombre):
        if self.source is SourceFlux.LCG:
            return (self.entiers(nombre) >= self.parametres.m / 2).astype(np.int64)
        return self.entiers(nombre)

    def valeurs(self, nombre):
        """Réels de [0, 1) : x/m pour le LCG, octets quantiques centrés sinon"""
        if self.source is SourceFlux.LCG:
            return self.entiers(nombre) / self.parametres.m
        bits = self.entiers(nombre * BITS_PAR_VALEUR_QRNG).reshape(nombre, BITS_PAR_VALEUR_QRNG)
        poids = 1 << np.arange(BITS_PAR_VALEUR_QRNG - 1, -1, -1)
        return (bits @ poids + 0.5) / (1 << BITS_PAR_VALEUR_QRNG)


@dataclass(frozen=True)
class RapportUniformite:
    """
    Attributes:
        n: Taille de l'échantillon
        moyenne: Moyenne empirique
        ecart_moyenne: |moyenne − 1/2| rapporté à 1/2
        autocorrelations: Décalage → autocorrélation (None si indéfinie)
        khi2: Statistique sur 16 classes
        p_valeur: p-valeur du khi-deux
        uniforme: p_valeur >= 0.01
        periode: Plus petite période détectée dans la fenêtre, ou None
    """

    n: int
    moyenne: float
    ecart_moyenne: float
    autocorrelations: dict
    khi2: float
    p_valeur: float
    uniforme: bool
    periode: int = None


def detecter_periode(valeurs, fenetre=FENETRE_PERIODE, recouvrement=RECOUVREMENT_PERIODE):
    """Plus petit p tel que x[p:] == x[:-p] sur au moins `recouvrement` termes"""
    echantillon = np.asarray(valeurs)[:fenetre]
    for p in range(1, echantillon.size - recouvrement + 1):
        if np.array_equal(echantillon[p:], echantillon[:-p]):
            return p
    return None


def rapport_uniformite(valeurs):
    """
    Écart à la moyenne uniforme, autocorrélations des décalages 1 à 16,
    khi-deux sur 16 classes et période éventuelle

    Args:
        valeurs: Réels de [0, 1)

    Returns:
        RapportUniformite
    """
    valeurs = np.asarray(valeurs, dtype=float)
    if valeurs.size < TAILLE_MINIMALE_RAPPORT:
        raise ErreurParametres(
            f"Au moins {TAILLE_MINIMALE_RAPPORT} valeurs sont requises ({valeurs.size})"
        )
    if valeurs.min() < 0 or valeurs.max() >= 1:
        raise ErreurParametres("Les valeurs doivent appartenir à [0, 1)")

    serie = pd.Series(valeurs)
    autocorrelations = {}
    for decalage in DECALAGES_AUTOCORRELATION:
        valeur = serie.autocorr(lag=decalage)
        autocorrelations[decalage] = None if math.isnan(valeur) else float(valeur)

    effectifs, _ = np.histogram(valeurs, bins=NOMBRE_CLASSES, range=(0.0, 1.0))
    khi2, p_valeur = stats.chisquare(effectifs)
    moyenne = float(valeurs.mean())
    periode = detecter_periode(valeurs)
    logger.debug("Uniformité : n=%d, p=%.4f, période=%s", valeurs.size, p_valeur, periode)

    return RapportUniformite(
        n=int(valeurs.size),
        moyenne=moyenne,
        ecart_moyenne=abs(moyenne - 0.5) / 0.5,
        autocorrelations=autocorrelations,
        khi2=float(khi2),
        p_valeur=float(p_valeur),
        uniforme=bool(p_valeur >= SEUIL_KHI2),
        periode=periode,
    )


def lignes_decimales(entiers):
    return [str(int(x)) for x in entiers]


def lignes_hexadecimales(bits):
    """Bits regroupés par 64 et écrits en hexadécimal, dernier groupe complété par des zéros"""
    bits = [int(b) for b in bits]
    lignes = []
    for debut in range(0, len(bits), BITS_PAR_LIGNE_HEX):
        groupe = bits[debut:debut + BITS_PAR_LIGNE_HEX]
        complement = -len(groupe) % 4
        valeur = int(''.join(map(str, groupe)) + '0' * complement, 2)
        lignes.append(format(valeur, f'0{(len(groupe) + complement) // 4}x'))
    return lignes
