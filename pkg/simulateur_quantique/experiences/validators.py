"""
Validateurs des paramètres de la ligne de commande
"""

from django.conf import settings
from django.core.validators import ValidationError
from django.utils.translation import gettext_lazy as _

from noyau_quantique.aleatoire import PRESETS_LCG, TAILLE_MINIMALE_RAPPORT
from noyau_quantique.monnaie import MAX_QUBITS_BILLET, MAX_QUBITS_ECLAIR, PolitiqueBanque
from noyau_quantique.sous_routines import MAX_QUBITS_GROVER, MAX_T_AMPLITUDE

GRAINE_MAX = 2 ** 64 - 1
ESSAIS_MAX = 10 ** 7
NOMBRE_FLUX_MAX = 10 ** 7


class ValidateurParametres:
    """
    Classe de validation des paramètres d'expérience
    """

    @staticmethod
    def valider_graine(graine):
        """Graine entière dans [0, 2^64)"""
        if graine is None:
            raise ValidationError(_("La graine est requise."))
        if not 0 <= graine <= GRAINE_MAX:
            raise ValidationError(_("La graine doit être comprise entre 0 et 2^64 - 1."))
        return graine

    @staticmethod
    def valider_essais(essais):
        if essais is None:
            return None
        if essais < 1:
            raise ValidationError(_("Le nombre d'essais doit être positif."))
        if essais > ESSAIS_MAX:
            raise ValidationError(_("Le nombre d'essais semble excessivement élevé."))
        return essais

    @staticmethod
    def valider_qubits(qubits, maximum=None):
        """Nombre de qubits entre 1 et la limite de l'expérience"""
        if qubits is None:
            return None
        limite = min(maximum or MAX_QUBITS_BILLET, getattr(settings, 'SIMULATEUR_MAX_QUBITS', 24))
        if not 1 <= qubits <= limite:
            raise ValidationError(
                _("Le nombre de qubits doit être compris entre 1 et %(limite)s."),
                params={'limite': limite},
            )
        return qubits

    @staticmethod
    def valider_politique(politique):
        if politique is None:
            return None
        valeurs = [p.value for p in PolitiqueBanque]
        if politique not in valeurs:
            raise ValidationError(
                _("Politique inconnue. Valeurs admises : %(valeurs)s."),
                params={'valeurs': ', '.join(valeurs)},
            )
        return politique

    @staticmethod
    def valider_attaque_politique(attaque, politique):
        """L'attaque par mesure n'interroge jamais la banque"""
        if attaque == 'guess' and politique is not None:
            raise ValidationError(_("L'attaque 'guess' n'accepte pas d'option --policy."))

    @staticmethod
    def valider_t(t):
        if t is None:
            return None
        if t < 2 or t > MAX_T_AMPLITUDE or t & (t - 1):
            raise ValidationError(
                _("t doit être une puissance de deux entre 2 et %(max)s."),
                params={'max': MAX_T_AMPLITUDE},
            )
        return t

    @staticmethod
    def valider_iterations(iterations):
        if iterations is not None and iterations < 0:
            raise ValidationError(_("Le nombre d'itérations ne peut pas être négatif."))
        return iterations

    @staticmethod
    def valider_qubits_algorithme(nom, qubits):
        """Limites propres à chaque algorithme"""
        if qubits is None:
            return None
        limites = {
            'grover': MAX_QUBITS_GROVER,
            'gradient': 4,
            'lightning': MAX_QUBITS_ECLAIR,
            'phase': 10,
        }
        if nom not in limites:
            raise ValidationError(
                _("L'algorithme %(nom)s n'accepte pas d'option --qubits."), params={'nom': nom}
            )
        if nom == 'lightning' and qubits < 3:
            raise ValidationError(_("Le schéma éclair exige au moins 3 qubits."))
        return ValidateurParametres.valider_qubits(qubits, limites[nom])

    @staticmethod
    def valider_flux(source, nombre, graine, preset):
        """Taille du flux et graine non dégénérée du LCG"""
        if nombre < TAILLE_MINIMALE_RAPPORT:
            raise ValidationError(
                _("Au moins %(minimum)s valeurs sont nécessaires au rapport d'uniformité."),
                params={'minimum': TAILLE_MINIMALE_RAPPORT},
            )
        if nombre > NOMBRE_FLUX_MAX:
            raise ValidationError(_("Le flux demandé est excessivement long."))
        if source == 'lcg':
            if preset not in PRESETS_LCG:
                raise ValidationError(_("Paramétrage LCG inconnu."))
            lcg = PRESETS_LCG[preset]
            if lcg.c == 0 and graine % lcg.m == 0:
                raise ValidationError(_("Graine dégénérée : le LCG resterait à 0."))
