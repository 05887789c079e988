"""
Base commune des commandes d'expérience : options partagées, validation,
émission du rapport et code de sortie
"""

import io
import json
import logging
import time

import pandas as pd
from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from experiences.audit import AuditLogger
from experiences.models import RapportExperience
from experiences.serializers import RapportExperienceSerializer, aplatir_rapport
from experiences.validators import ValidateurParametres
from noyau_quantique.erreurs import ErreurSimulation
from noyau_quantique.gestionnaire_experiences import obtenir_gestionnaire_experiences


logger = logging.getLogger('experiences')

CODE_PARAMETRES = 2
CODE_CONTROLES = 1


def _valeur_csv(valeur):
    if isinstance(valeur, (list, dict)) or valeur is None:
        return json.dumps(valeur, sort_keys=True)
    return valeur


def formater_rapport(donnees, sortie):
    """
    Args:
        donnees: Représentation publique du rapport
        sortie: 'json' ou 'csv'

    Returns:
        str: Document prêt à écrire sur la sortie standard
    """
    if sortie == 'csv':
        lignes = [(s, c, _valeur_csv(v)) for s, c, v in aplatir_rapport(donnees)]
        tampon = io.StringIO()
        pd.DataFrame(lignes, columns=['section', 'cle', 'valeur']).to_csv(
            tampon, index=False, lineterminator='\n'
        )
        return tampon.getvalue()
    return json.dumps(donnees, sort_keys=True, indent=2) + '\n'


class CommandeExperience(BaseCommand):
    """
    Commande qui exécute une expérience et écrit son rapport

    Les sous-classes implémentent ajouter_arguments() et executer().
    """

    nom_experience = None

    def add_arguments(self, parser):
        parser.add_argument(
            '--seed', type=int, default=getattr(settings, 'SIMULATEUR_GRAINE_PAR_DEFAUT', 0),
            help="Graine globale (entier de 0 à 2^64 - 1)",
        )
        parser.add_argument('--trials', type=int, default=None, help="Nombre d'essais")
        parser.add_argument('--out', choices=['json', 'csv'], default='json', help="Format du rapport")
        parser.add_argument(
            '--enregistrer', action='store_true', help="Enregistre le rapport en base de données"
        )
        self.ajouter_arguments(parser)

    def ajouter_arguments(self, parser):
        pass

    def executer(self, gestionnaire, options):
        """
        Returns:
            dict: Rapport produit par le gestionnaire
        """
        raise NotImplementedError

    def handle(self, *args, **options):
        debut = time.monotonic()
        try:
            ValidateurParametres.valider_graine(options['seed'])
            ValidateurParametres.valider_essais(options['trials'])
            rapport = self.executer(obtenir_gestionnaire_experiences(), options)
        except ValidationError as erreur:
            raise CommandError('; '.join(erreur.messages), returncode=CODE_PARAMETRES)
        except ErreurSimulation as erreur:
            logger.error("Paramètres rejetés par le simulateur : %s", erreur)
            raise CommandError(str(erreur), returncode=CODE_PARAMETRES)

        instance = RapportExperience.depuis_rapport(rapport)
        donnees = RapportExperienceSerializer(instance).data
        self.stdout.write(formater_rapport(donnees, options['out']), ending='')

        if options['enregistrer']:
            instance.save()
        AuditLogger.log_execution(rapport, time.monotonic() - debut)

        echecs = instance.controles_en_echec()
        if echecs:
            for nom in echecs:
                self.stderr.write(f"Contrôle en échec : {nom}")
            raise CommandError(
                f"{len(echecs)} contrôle(s) en échec", returncode=CODE_CONTROLES
            )
