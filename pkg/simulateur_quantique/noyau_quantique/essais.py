"""
Graines et exécution des essais répétés

La graine de l'essai i est SeedSequence([graine_maitre, i]) : changer le
nombre d'essais ne modifie pas les essais déjà tirés.
"""

import numpy as np
from joblib import Parallel, delayed


def generateur(graine):
    """Générateur numpy déterministe pour une graine entière"""
    return np.random.default_rng(np.random.SeedSequence(int(graine)))


def generateur_essai(graine_maitre, indice):
    return np.random.default_rng(np.random.SeedSequence([int(graine_maitre), int(indice)]))


def _executer_essai(fonction, graine_maitre, indice):
    return fonction(generateur_essai(graine_maitre, indice))


def executer_essais(fonction, graine_maitre, nombre, n_jobs=1):
    """
    Exécute `nombre` essais indépendants de fonction(rng)

    Args:
        fonction: Appelable recevant un np.random.Generator
        graine_maitre: Graine globale
        nombre: Nombre d'essais
        n_jobs: Parallélisme joblib (l'ordre des résultats est conservé)

    Returns:
        list: Résultats dans l'ordre des essais
    """
    if n_jobs == 1:
        return [_executer_essai(fonction, graine_maitre, i) for i in range(nombre)]
    return Parallel(n_jobs=n_jobs)(
        delayed(_executer_essai)(fonction, graine_maitre, i) for i in range(nombre)
    )


def graine_derivee(graine_maitre, *cles):
    """Graine entière dérivée de (graine_maitre, cles…) pour une sous-expérience"""
    sequence = np.random.SeedSequence([int(graine_maitre)] + [int(c) for c in cles])
    return int(sequence.generate_state(1)[0])
