"""
Exceptions du simulateur quantique
"""


class ErreurSimulation(ValueError):
    """Erreur de base de toutes les opérations du simulateur"""


class ErreurDimension(ErreurSimulation):
    """Nombre de qubits hors limites ou tailles incompatibles"""


class ErreurIndiceQubit(ErreurSimulation):
    """Indice de qubit invalide pour l'état adressé"""


class ErreurNormalisation(ErreurSimulation):
    """Vecteur d'état non normalisé ou amplitudes non finies"""


class ErreurNonUnitaire(ErreurSimulation):
    """Matrice qui ne satisfait pas U†U = I"""


class ErreurRegistres(ErreurSimulation):
    """Registres qui se chevauchent ou d'arité incorrecte"""


class ErreurVecteurPropre(ErreurSimulation):
    """Le vecteur fourni n'est pas un vecteur propre de l'unitaire"""


class ErreurNonHermitienne(ErreurSimulation):
    """Matrice d'un système linéaire qui n'est pas hermitienne"""


class ErreurSerieInconnue(ErreurSimulation):
    """Numéro de série absent des registres de la banque"""


class ErreurParametres(ErreurSimulation):
    """Paramètres d'un algorithme ou d'un générateur invalides"""


class ErreurAnalyseCircuit(ErreurSimulation):
    """
    Erreur de lecture du format texte des circuits

    Args:
        message: Description de l'erreur
        numero_ligne: Ligne fautive (à partir de 1)
        jeton: Jeton fautif
    """

    def __init__(self, message, numero_ligne=None, jeton=None):
        self.numero_ligne = numero_ligne
        self.jeton = jeton
        if numero_ligne is not None:
            message = f"ligne {numero_ligne}, jeton {jeton!r} : {message}"
        super().__init__(message)


class ErreurConditionnement(ErreurSimulation):
    """
    Système de Vandermonde singulier ou mal conditionné

    Args:
        message: Description de l'erreur
        conditionnement: Estimation du nombre de conditionnement
    """

    def __init__(self, message, conditionnement):
        self.conditionnement = conditionnement
        super().__init__(f"{message} (conditionnement estimé : {conditionnement:.3e})")
