"""
Module d'audit pour tracer les exécutions d'expériences
"""

import json
import logging


# Logger d'audit
audit_logger = logging.getLogger('audit')


class AuditLogger:
    """
    Classe pour logger les actions d'audit
    """

    @staticmethod
    def log_action(experience, action, graine, details=None):
        """
        Log une action pour l'audit

        Args:
            experience: Nom de l'expérience
            action: Action effectuée (run, save, fail)
            graine: Graine globale de l'exécution
            details: Détails supplémentaires
        """
        details_str = json.dumps(details, sort_keys=True) if details else ''

        audit_logger.info(
            '',
            extra={
                'experience': experience,
                'action': action,
                'graine': graine,
                'details': details_str,
            }
        )

    @staticmethod
    def log_execution(rapport, duree):
        """Log une exécution d'expérience"""
        echecs = [v['nom'] for v in rapport['verifications'] if not v['succes']]
        AuditLogger.log_action(
            experience=rapport['experience'],
            action='fail' if echecs else 'run',
            graine=rapport['graine'],
            details={
                'parametres': rapport['parametres'],
                'echecs': echecs,
                'duree_secondes': round(duree, 3),
            }
        )

    @staticmethod
    def log_enregistrement(instance):
        """Log l'enregistrement d'un rapport en base"""
        AuditLogger.log_action(
            experience=instance.experience,
            action='save',
            graine=instance.graine,
            details={'id': instance.pk, 'succes': instance.succes},
        )
