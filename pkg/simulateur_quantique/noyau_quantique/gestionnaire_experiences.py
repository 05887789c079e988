"""
Gestionnaire principal des expériences : construit, exécute et vérifie
chaque démonstration, protocole et algorithme, puis produit le rapport
"""

import functools
import json
import logging
import math
import os

import numpy as np
from django.conf import settings

from . import aleatoire, algorithmes, monnaie
from .circuits import (
    Circuit,
    ModeOracle,
    Oracle,
    deserialiser,
    executer,
    executer_tirs,
    matrice_circuit,
    nombre_portes,
    serialiser,
)
from .erreurs import ErreurDimension, ErreurParametres
from .essais import executer_essais, generateur, generateur_essai, graine_derivee
from .etats import KET_0, KET_1, KET_MOINS, KET_PLUS, etat_base, produit_tensoriel_multiple
from .portes import (
    MATRICE_S,
    PORTE_CNOT,
    PORTE_H,
    PORTE_SWAP,
    PORTE_TOFFOLI,
    ApplicationPorte,
    decomposition_toffoli,
    matrice_de,
)
from .sous_routines import (
    circuit_qft,
    circuit_qft_inverse,
    decoder_phase,
    demo_retroaction_phase,
    distribution_estimation_phase,
    estimation_phase,
    exposant_grover,
    iterations_optimales,
    matrice_dft,
    probabilite_succes_grover,
    recherche_grover,
    recherche_naive,
)


logger = logging.getLogger(__name__)

FIGURES = ('I', 'II', 'III', 'IV')
ATTAQUES = ('none', 'guess', 'adaptive', 'game')
ALGORITHMES = ('ols', 'grover', 'gradient', 'montecarlo', 'qubo', 'lightning', 'phase')
SOURCES = ('lcg', 'qrng')

SIGMAS = 3
TOLERANCE_EXACTE = 1e-9
TOLERANCE_ENTREES = 1e-12
MAX_QUBITS_NAIF_SIMULE = 8
FACTEUR_PLAFOND_NAIF = 64
FRACTIONS_GRADIENT = (-0.5, 0.375, 0.25)


def en_python(valeur):
    """Convertit récursivement les types numpy pour json.dumps"""
    if isinstance(valeur, dict):
        return {str(cle): en_python(v) for cle, v in valeur.items()}
    if isinstance(valeur, (list, tuple)):
        return [en_python(v) for v in valeur]
    if isinstance(valeur, np.ndarray):
        return en_python(valeur.tolist())
    if isinstance(valeur, (np.bool_, bool)):
        return bool(valeur)
    if isinstance(valeur, np.integer):
        return int(valeur)
    if isinstance(valeur, (np.floating, float)):
        valeur = float(valeur)
        return valeur if math.isfinite(valeur) else None
    if isinstance(valeur, complex):
        return [valeur.real, valeur.imag]
    return valeur


class Verifications:
    """Liste ordonnée des contrôles (nom, attendu, observé, succès) d'un rapport"""

    def __init__(self):
        self.elements = []

    def ajouter(self, nom, attendu, observe, succes):
        self.elements.append({
            'nom': nom,
            'attendu': en_python(attendu),
            'observe': en_python(observe),
            'succes': bool(succes),
        })

    def egal(self, nom, attendu, observe):
        self.ajouter(nom, attendu, observe, attendu == observe)

    def proche(self, nom, attendu, observe, tolerance):
        self.ajouter(nom, attendu, observe, abs(observe - attendu) <= tolerance)

    def au_moins(self, nom, seuil, observe):
        self.ajouter(nom, f">= {seuil}", observe, observe >= seuil)

    def au_plus(self, nom, seuil, observe):
        self.ajouter(nom, f"<= {seuil}", observe, observe <= seuil)

    def binomiale(self, nom, p, succes, essais, sigmas=SIGMAS):
        """Fréquence observée à moins de `sigmas` écarts-types de p"""
        frequence = succes / essais
        ecart = sigmas * math.sqrt(p * (1 - p) / essais)
        self.ajouter(nom, p, frequence, abs(frequence - p) <= ecart + TOLERANCE_ENTREES)

    @property
    def echecs(self):
        return [v['nom'] for v in self.elements if not v['succes']]


class GestionnaireExperiences:
    """
    Gestionnaire principal des expériences du simulateur
    """

    _instance = None

    def __new__(cls):
        """Implémentation du pattern Singleton"""
        if cls._instance is None:
            cls._instance = super(GestionnaireExperiences, cls).__new__(cls)
            cls._instance.initialiser()
        return cls._instance

    def initialiser(self):
        """Lit la configuration du simulateur"""
        self.nombre_travaux = int(getattr(settings, 'SIMULATEUR_NOMBRE_TRAVAUX', 1))
        self.essais_par_defaut = int(getattr(settings, 'SIMULATEUR_ESSAIS_PAR_DEFAUT', 10000))
        self.max_qubits = int(getattr(settings, 'SIMULATEUR_MAX_QUBITS', 24))
        self.dossier_donnees = getattr(
            settings,
            'SIMULATEUR_DOSSIER_DONNEES',
            os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'donnees'),
        )

    def _rapport(self, experience, parametres, graine, resultats, verifications):
        logger.info(
            "Expérience %s terminée : %d contrôle(s), %d échec(s)",
            experience, len(verifications.elements), len(verifications.echecs),
        )
        return {
            'experience': experience,
            'parametres': en_python(parametres),
            'graine': int(graine),
            'resultats': en_python(resultats),
            'verifications': verifications.elements,
        }

    def _verifier_qubits(self, qubits):
        if qubits is not None and not 1 <= qubits <= self.max_qubits:
            raise ErreurDimension(f"Nombre de qubits hors de [1, {self.max_qubits}] : {qubits}")

    def _essais(self, fonction, graine, essais):
        return executer_essais(fonction, graine, essais, n_jobs=self.nombre_travaux)

    # Démonstrations des figures

    def executer_demo(self, figure, graine, essais=None):
        """
        Construit, sérialise, exécute et vérifie le circuit d'une figure

        Args:
            figure: 'I', 'II', 'III' ou 'IV'
            graine: Graine globale
            essais: Nombre de tirs pour la figure I

        Returns:
            dict: Rapport d'expérience
        """
        if figure not in FIGURES:
            raise ErreurParametres(f"Figure inconnue : {figure!r}")
        essais = essais or self.essais_par_defaut
        verifications = Verifications()
        rng = generateur(graine)
        parametres = {'figure': figure}

        if figure == 'I':
            circuit = Circuit(1, [ApplicationPorte(PORTE_H, (0,))], (0,))
            avant = executer(Circuit(1, circuit.etapes)).etat_final
            tirs = executer_tirs(circuit, essais, rng)
            uns = sum(1 for t in tirs if t == '1')
            verifications.proche('probabilite_un', 0.5, float(avant.probabilites()[1]), TOLERANCE_ENTREES)
            verifications.binomiale('frequence_un', 0.5, uns, essais)
            resultats = {'uns': uns, 'zeros': essais - uns}
            parametres['essais'] = essais

        elif figure == 'II':
            circuit = Circuit(
                2,
                [ApplicationPorte(PORTE_CNOT, c) for c in ((0, 1), (1, 0), (0, 1))],
                (0, 1),
            )
            execution = executer(circuit, initial=etat_base('01'), rng=rng)
            verifications.egal('lecture_finale', '10', execution.bits)
            verifications.egal('nombre_portes', 3, nombre_portes(circuit).nombre_portes_elementaires)
            verifications.proche(
                'matrice_swap', 0.0,
                float(np.max(np.abs(matrice_circuit(circuit) - matrice_de(PORTE_SWAP)))),
                TOLERANCE_ENTREES,
            )
            resultats = {'etat_initial': '01', 'lecture': execution.bits}

        elif figure == 'III':
            circuit = Circuit(3, [ApplicationPorte(PORTE_TOFFOLI, (0, 1, 2))], (2,))
            execution = executer(circuit, initial=etat_base('111'), rng=rng)
            verifications.egal('ancilla_nand_11', '0', execution.bits)
            table = {}
            for entree in ('00', '01', '10', '11'):
                lecture = executer(circuit, initial=etat_base(entree + '1'), rng=rng).bits
                table[entree] = lecture
                nand = '0' if entree == '11' else '1'
                verifications.egal(f"nand_{entree}", nand, lecture)
            verifications.egal(
                'nombre_portes_elementaires',
                len(decomposition_toffoli()),
                nombre_portes(circuit, base_elementaire=True).nombre_portes_elementaires,
            )
            resultats = {'table_nand': table}

        else:
            circuit = Circuit(3, decomposition_toffoli())
            ecart = float(np.max(np.abs(matrice_circuit(circuit) - matrice_de(PORTE_TOFFOLI))))
            verifications.proche('ecart_toffoli', 0.0, ecart, TOLERANCE_ENTREES)
            verifications.egal('nombre_portes', 16, nombre_portes(circuit).nombre_portes_elementaires)
            verifications.ajouter(
                'portes_a_deux_qubits_au_plus', '<= 2',
                max(e.porte.nombre_qubits for e in circuit.etapes),
                all(e.porte.nombre_qubits <= 2 for e in circuit.etapes),
            )
            resultats = {'ecart_maximal': ecart}

        texte = serialiser(circuit)
        verifications.egal('aller_retour_texte', True, deserialiser(texte) == circuit)
        resultats['circuit'] = texte
        return self._rapport(f"demo-{figure}", parametres, graine, resultats, verifications)

    # Monnaie quantique

    def executer_monnaie(self, attaque, n, graine, essais=None, politique=None):
        """
        Args:
            attaque: 'none', 'guess', 'adaptive' ou 'game'
            n: Qubits par billet
            graine: Graine globale
            essais: Nombre d'essais
            politique: Valeur de PolitiqueBanque ou None pour la politique par défaut

        Returns:
            dict: Rapport d'expérience
        """
        if attaque not in ATTAQUES:
            raise ErreurParametres(f"Attaque inconnue : {attaque!r}")
        if attaque == 'guess' and politique is not None:
            raise ErreurParametres("L'attaque par mesure n'interroge pas la banque : pas de politique")
        self._verifier_qubits(n)
        essais = essais or self.essais_par_defaut
        verifications = Verifications()

        if politique is None:
            politique = (
                monnaie.PolitiqueBanque.REEMISSION_SI_VALIDE if attaque == 'game'
                else monnaie.PolitiqueBanque.RETOUR_TOUJOURS
            )
        politique = monnaie.PolitiqueBanque(politique)
        parametres = {'attaque': attaque, 'n': n, 'essais': essais, 'politique': politique.value}

        if attaque == 'none':
            resultats = self._monnaie_completude(n, graine, essais, politique, verifications)
        elif attaque == 'guess':
            parametres['politique'] = None
            resultats = self._monnaie_devine_mesure(n, graine, essais, verifications)
        elif attaque == 'adaptive':
            resultats = self._monnaie_adaptative(n, graine, essais, politique, verifications)
        else:
            resultats = self._monnaie_jeu(n, graine, essais, politique, verifications)
        return self._rapport(f"money-{attaque}", parametres, graine, resultats, verifications)

    def _monnaie_completude(self, n, graine, essais, politique, verifications):
        rng = generateur(graine)
        banque = monnaie.Banque(politique)
        billet = banque.emettre(5, rng, bits='01011', bases='11001')
        attendu = produit_tensoriel_multiple(KET_PLUS, KET_MOINS, KET_0, KET_1, KET_MOINS)
        obtenu = produit_tensoriel_multiple(*billet.qubits)
        verifications.egal('exemple_cinq_qubits', True, obtenu.proche(attendu))
        verifications.egal('exemple_valide', 'VALID', banque.verifier(billet, rng).verdict.value)

        valides = sum(self._essais(functools.partial(_essai_completude, n, politique), graine, essais))
        verifications.egal('completude', 1.0, valides / essais)

        espion = self._essais(functools.partial(_essai_espion, n), graine, essais)
        invalides = sum(espion)
        verifications.binomiale('perturbation_espion', 0.5, invalides, essais)

        aleatoires = sum(self._essais(functools.partial(_essai_billet_aleatoire, n), graine, essais))
        verifications.au_plus('acceptation_billet_aleatoire', 0.6 ** n, aleatoires / essais)

        clonage = {
            '0': monnaie.fidelite_clonage(KET_0),
            '1': monnaie.fidelite_clonage(KET_1),
            '+': monnaie.fidelite_clonage(KET_PLUS),
        }
        verifications.proche('clonage_base_0', 1.0, clonage['0'], TOLERANCE_ENTREES)
        verifications.proche('clonage_base_1', 1.0, clonage['1'], TOLERANCE_ENTREES)
        verifications.proche('clonage_superposition', 0.5, clonage['+'], TOLERANCE_ENTREES)
        return {
            'taux_validation': valides / essais,
            'frequence_perturbation': invalides / essais,
            'acceptation_billet_aleatoire': aleatoires / essais,
            'fidelites_clonage': clonage,
        }

    def _monnaie_devine_mesure(self, n, graine, essais, verifications):
        resultats = self._essais(functools.partial(_essai_devine_mesure, n), graine, essais)
        une = sum(r[0] for r in resultats)
        deux = sum(r[1] for r in resultats)
        verifications.binomiale('acceptation_une_copie', 0.75 ** n, une, essais)
        verifications.au_plus('deux_copies_sous_une', une / essais, deux / essais)
        return {
            'acceptation_une_copie': une / essais,
            'acceptation_deux_copies': deux / essais,
            'theorique_une_copie': 0.75 ** n,
            'theorique_deux_copies': 0.625 ** n,
        }

    def _monnaie_adaptative(self, n, graine, essais, politique, verifications):
        resultats = self._essais(functools.partial(_essai_adaptatif, n, politique), graine, essais)
        reussites = sum(r[0] for r in resultats)
        appels = max(r[1] for r in resultats)
        interruptions = sum(r[2] for r in resultats)
        taux = reussites / essais
        if politique is monnaie.PolitiqueBanque.RETOUR_TOUJOURS:
            verifications.egal('recuperation_complete', 1.0, taux)
            verifications.au_plus('appels_verification', 2 * n, appels)
        elif n >= 2:
            verifications.ajouter('recuperation_incomplete', '< 1.0', taux, taux < 1.0)
        return {
            'taux_recuperation': taux,
            'appels_maximum': appels,
            'interruptions': interruptions,
        }

    def _monnaie_jeu(self, n, graine, essais, politique, verifications):
        resultats = {}
        for position, classe in enumerate(
            (monnaie.AdversaireHonnete, monnaie.AdversaireDevineMesure, monnaie.AdversaireAdaptatif)
        ):
            adversaire = classe()
            jeu = monnaie.jeu_securite(
                adversaire, 1, 2, essais, graine_derivee(graine, position), politique,
                taille_billet=n, n_jobs=self.nombre_travaux,
            )
            resultats[adversaire.nom] = {
                'victoires': jeu.victoires,
                'frequence': jeu.frequence,
                'succes_moyens': jeu.succes_moyens,
            }
        verifications.egal('honnete_sans_victoire', 0, resultats['honnete']['victoires'])
        borne = 0.75 ** n
        ecart = SIGMAS * math.sqrt(borne * (1 - borne) / essais)
        verifications.au_plus('devine_mesure_borne', borne + ecart, resultats['devine-mesure']['frequence'])
        if politique is monnaie.PolitiqueBanque.RETOUR_TOUJOURS:
            verifications.egal('adaptatif_gagne', 1.0, resultats['adaptatif']['frequence'])
        return resultats

    # Algorithmes

    def executer_algorithme(self, nom, graine, essais=None, **options):
        """
        Args:
            nom: Un des ALGORITHMES
            graine: Graine globale
            essais: Nombre d'essais
            options: qubits, iterations, t, repetitions selon l'algorithme

        Returns:
            dict: Rapport d'expérience
        """
        if nom not in ALGORITHMES:
            raise ErreurParametres(f"Algorithme inconnu : {nom!r}")
        essais = essais or self.essais_par_defaut
        options = {cle: valeur for cle, valeur in options.items() if valeur is not None}
        self._verifier_qubits(options.get('qubits'))
        verifications = Verifications()
        methode = getattr(self, f"_algorithme_{nom}")
        parametres, resultats = methode(graine, essais, verifications, **options)
        return self._rapport(nom, parametres, graine, resultats, verifications)

    def _algorithme_ols(self, graine, essais, verifications):
        resultat = algorithmes.demo_mco(generateur(graine))
        hhl = resultat.hhl
        verifications.au_moins('fidelite_cible', 1 - 1e-6, resultat.fidelite)
        verifications.proche('proportionnalite_beta', 0.0, resultat.proportionnalite, TOLERANCE_EXACTE)
        verifications.ajouter(
            'acceptation_positive', '> 0', hhl.probabilite_acceptation, hhl.probabilite_acceptation > 0
        )
        parametres = {'bits_horloge': algorithmes.BITS_HORLOGE_MCO, 'constante': hhl.constante}
        return parametres, {
            'solution': hhl.solution.real,
            'fidelite': resultat.fidelite,
            'accepte': hhl.accepte,
            'probabilite_acceptation': hhl.probabilite_acceptation,
            'beta_classique': resultat.beta_classique,
            'beta_fois_32': 32 * resultat.beta_classique,
        }

    def _algorithme_grover(self, graine, essais, verifications, qubits=3, iterations=None):
        if iterations is None:
            iterations = iterations_optimales(qubits)
        marque = int(generateur(graine).integers(0, 1 << qubits))
        oracle = _oracle_marque(qubits, marque)

        resultat = recherche_grover(oracle, qubits, iterations, generateur(graine))
        probabilite = float(resultat.etat_registre.probabilites()[marque])
        theorique = probabilite_succes_grover(qubits, iterations)
        verifications.proche('probabilite_succes', theorique, probabilite, TOLERANCE_EXACTE)
        verifications.egal('requetes', iterations, resultat.requetes)

        trouves = self._essais(
            functools.partial(_essai_grover, qubits, iterations, marque), graine, essais
        )
        verifications.binomiale('frequence_succes', theorique, sum(trouves), essais)

        naifs = self._essais(functools.partial(_essai_naif, qubits, marque), graine, essais)
        requetes_naives = [requetes for requetes, succes in naifs if succes]
        moyenne_naive = float(np.mean(requetes_naives)) if requetes_naives else None

        oracles = {n: (_oracle_marque(n, 0), 0) for n in range(3, 11)}
        exposant = exposant_grover(oracles)
        verifications.proche('exposant', 0.5, exposant.beta, 0.05)
        return {'qubits': qubits, 'iterations': iterations, 'marque': marque}, {
            'probabilite_succes': probabilite,
            'probabilite_theorique': theorique,
            'frequence_succes': sum(trouves) / essais,
            'requetes_moyennes_naives': moyenne_naive,
            'echecs_naifs': len(naifs) - len(requetes_naives),
            'naif_simule': qubits <= MAX_QUBITS_NAIF_SIMULE,
            'iterations_minimales': exposant.iterations,
            'exposant': exposant.beta,
        }

    def _algorithme_gradient(self, graine, essais, verifications, qubits=4):
        rng = generateur(graine)
        m, l = 4.0, 1.0
        taille = 1 << qubits
        composantes = tuple(m * k / taille for k in _entiers_gradient(taille))
        resultats = {}
        for d in (1, 2, 3):
            g = np.array(composantes[:d])
            plage = float(np.sum(np.abs(g)) * l * (taille - 1) / taille)
            probleme = algorithmes.ProblemeGradient(
                functools.partial(_lineaire, g), np.zeros(d), qubits, m, l, m / taille, plage
            )
            quantique = algorithmes.gradient_jordan(probleme, rng)
            avant = algorithmes.gradient_differences_finies(
                functools.partial(_lineaire, g), np.zeros(d), 'forward', 0.5
            )
            centre = algorithmes.gradient_differences_finies(
                functools.partial(_lineaire, g), np.zeros(d), 'centered', 0.5
            )
            verifications.proche(
                f"jordan_exact_d{d}", 0.0, float(np.max(np.abs(quantique.gradient - g))), TOLERANCE_EXACTE
            )
            verifications.egal(f"jordan_requetes_d{d}", 1, quantique.requetes)
            verifications.egal(f"avant_requetes_d{d}", d + 1, avant.requetes)
            verifications.egal(f"centre_requetes_d{d}", 2 * d, centre.requetes)
            resultats[f"d{d}"] = {
                'gradient_jordan': quantique.gradient,
                'lectures': quantique.lectures,
                'n0': probleme.n0,
                'gradient_avant': avant.gradient,
                'gradient_centre': centre.gradient,
            }
        return {'qubits': qubits, 'm': m, 'l': l, 'composantes': composantes}, resultats

    def _algorithme_montecarlo(self, graine, essais, verifications, t=32, repetitions=1):
        rng = generateur(graine)
        uniforme = Circuit(3, [ApplicationPorte(PORTE_H, (q,)) for q in range(3)])
        estimation = algorithmes.moyenne_monte_carlo(uniforme, _septiemes, t, repetitions, rng)

        seuil = 8 / math.pi ** 2
        frequences = {}
        cas = {
            'bernoulli': (Circuit(1), _demi),
            'x_sur_7': (uniforme, _septiemes),
        }
        for nom, (preparation, phi) in cas.items():
            for taille in (16, 32):
                frequence = algorithmes.frequence_borne_respectee(
                    preparation, phi, 0.5, taille, essais, generateur_essai(graine, taille)
                )
                frequences[f"{nom}_t{taille}"] = frequence
                ecart = SIGMAS * math.sqrt(seuil * (1 - seuil) / essais)
                verifications.au_moins(f"borne_{nom}_t{taille}", seuil - ecart, frequence)

        pente = algorithmes.pente_erreur_monte_carlo((8, 16, 32, 64), 128, 4, 7, graine)
        verifications.proche('pente_erreur', -1.0, pente.pente, 0.1)
        return {'t': t, 'repetitions': repetitions}, {
            'mu_estime': estimation.mu,
            'mu_exact': 0.5,
            'requetes': estimation.requetes,
            'frequences_borne': frequences,
            'pente': pente.pente,
            'erreurs_moyennes': dict(zip(pente.valeurs_t, pente.erreurs_moyennes)),
        }

    def _algorithme_qubo(self, graine, essais, verifications):
        chemin = os.path.join(self.dossier_donnees, 'qubo_10_variables.json')
        with open(chemin, encoding='utf-8') as fichier:
            probleme = algorithmes.ProblemeQubo.depuis_dict(json.load(fichier))
        force_brute = algorithmes.qubo_force_brute(probleme)
        gray = algorithmes.qubo_enumeration_gray(probleme)
        verifications.egal('solution_gray', force_brute.x, gray.x)
        verifications.proche('valeur_gray', force_brute.h0, gray.h0, TOLERANCE_EXACTE)

        rng = generateur(graine)
        aleatoires = rng.integers(0, 2, size=(1000, probleme.n))
        minimum = min(probleme.objectif(x) for x in aleatoires)
        verifications.au_plus('sous_echantillon_aleatoire', minimum, force_brute.h0)
        return {'instance': 'qubo_10_variables.json', 'n': probleme.n}, {
            'x': force_brute.x,
            'h0': force_brute.h0,
            'minimum_aleatoire': minimum,
        }

    def _algorithme_lightning(self, graine, essais, verifications, qubits=6):
        schema = monnaie.schema_jouet(qubits, 4)
        p, billet = monnaie.emettre_eclair(schema, generateur(graine))
        attendu = np.zeros(schema.taille)
        preimage = schema.preimage(p)
        attendu[preimage] = 1 / math.sqrt(preimage.size)
        verifications.proche(
            'uniformite', 0.0, float(np.max(np.abs(billet.amplitudes - attendu))), TOLERANCE_ENTREES
        )

        acceptes = sum(self._essais(functools.partial(_essai_eclair, qubits), graine, essais))
        verifications.egal('acceptation_billets_emis', 1.0, acceptes / essais)

        contrefacons = sum(self._essais(functools.partial(_essai_contrefacon_eclair, qubits), graine, essais))
        verifications.binomiale('acceptation_contrefacon_par_tour', 0.5, contrefacons, essais)
        return {'qubits': qubits, 'modulo': 4}, {
            'p': p,
            'taille_preimage': int(preimage.size),
            'acceptation_emis': acceptes / essais,
            'acceptation_contrefacons': contrefacons / essais,
        }

    def _algorithme_phase(self, graine, essais, verifications, qubits=5):
        rng = generateur(graine)
        exactes = 0
        for j in range(1 << qubits):
            matrice, vecteur = _phase_diagonale(j / (1 << qubits))
            distribution = distribution_estimation_phase(matrice, vecteur, qubits)
            exactes += abs(distribution[j] - 1.0) <= TOLERANCE_EXACTE
        verifications.egal('lectures_exactes', 1 << qubits, exactes)

        matrice, vecteur = _phase_diagonale(0.4375)
        inverse = estimation_phase(matrice, vecteur, 5, rng, registre_inverse=True)
        verifications.egal('exemple_lecture', '01110', inverse.lecture)
        verifications.proche('exemple_phase', 0.4375, inverse.phi, TOLERANCE_EXACTE)
        verifications.proche('decodage_inverse_10110', 0.40625, decoder_phase('10110', True), TOLERANCE_EXACTE)

        retroaction = demo_retroaction_phase(MATRICE_S, KET_1)
        verifications.proche('retroaction_cible', 1.0, retroaction.fidelite_cible, TOLERANCE_EXACTE)

        ecart_qft = 0.0
        for n in range(1, 7):
            ecart_qft = max(ecart_qft, float(np.max(np.abs(matrice_circuit(circuit_qft(n)) - matrice_dft(n)))))
        verifications.proche('qft_dft', 0.0, ecart_qft, TOLERANCE_EXACTE)
        identite = matrice_circuit(circuit_qft(6)) @ matrice_circuit(circuit_qft_inverse(6))
        verifications.proche(
            'qft_inverse', 0.0, float(np.max(np.abs(identite - np.eye(64)))), 1e-10
        )
        return {'qubits': qubits}, {
            'lectures_exactes': exactes,
            'exemple': {'lecture': inverse.lecture, 'phi': inverse.phi},
            'ancilla_retroaction': retroaction.ancilla.amplitudes,
            'ecart_qft': ecart_qft,
        }

    # Nombres aléatoires

    def executer_aleatoire(self, source, nombre, graine, preset='minimal', format_flux='decimal'):
        """
        Produit un flux et son rapport d'uniformité

        Returns:
            tuple: (rapport, lignes du flux)
        """
        if source not in SOURCES:
            raise ErreurParametres(f"Source inconnue : {source!r}")
        verifications = Verifications()
        parametres = {'source': source, 'nombre': nombre, 'format': format_flux}

        if source == 'lcg':
            lcg = aleatoire.PRESETS_LCG[preset]
            parametres['preset'] = preset
            flux = aleatoire.FluxBits(aleatoire.SourceFlux.LCG, graine, lcg)
            entiers = flux.entiers(nombre)
            valeurs = entiers / lcg.m
            verifications.egal('premiere_valeur', (lcg.a * (graine % lcg.m) + lcg.c) % lcg.m, int(entiers[0]))
            verifications.ajouter(
                'valeurs_dans_intervalle', '[0, 1)', [float(valeurs.min()), float(valeurs.max())],
                bool(valeurs.min() >= 0 and valeurs.max() < 1),
            )
            bits = (entiers >= lcg.m / 2).astype(int)
        else:
            flux = aleatoire.FluxBits(aleatoire.SourceFlux.QRNG, graine)
            entiers = flux.entiers(nombre)
            bits = entiers
            avant = aleatoire.etat_qrng()
            verifications.egal('etat_avant_mesure_plus', True, avant.proche(KET_PLUS))
            verifications.binomiale('frequence_un', 0.5, int(bits.sum()), nombre)
            valeurs = flux.valeurs(
                max(nombre // aleatoire.BITS_PAR_VALEUR_QRNG, aleatoire.TAILLE_MINIMALE_RAPPORT)
            )

        rapport = aleatoire.rapport_uniformite(valeurs)
        if source == 'lcg' and preset == 'mauvais':
            verifications.ajouter('periode_detectee', 'detectee', rapport.periode, rapport.periode is not None)
        elif source == 'lcg':
            verifications.egal('periode_detectee', None, rapport.periode)

        if format_flux == 'hex':
            lignes = aleatoire.lignes_hexadecimales(bits)
        else:
            lignes = aleatoire.lignes_decimales(entiers)
        resultats = {
            'premieres_valeurs': entiers[:8],
            'moyenne': rapport.moyenne,
            'ecart_moyenne': rapport.ecart_moyenne,
            'autocorrelations': rapport.autocorrelations,
            'khi2': rapport.khi2,
            'p_valeur': rapport.p_valeur,
            'uniforme': rapport.uniforme,
            'periode': rapport.periode,
        }
        return self._rapport(f"rng-{source}", parametres, graine, resultats, verifications), lignes


# Essais élémentaires (fonctions de module pour joblib)

def _essai_completude(n, politique, rng):
    banque = monnaie.Banque(politique)
    return banque.verifier(banque.emettre(n, rng), rng).valide


def _essai_espion(n, rng):
    """Un qubit en base de Hadamard espionné en base de calcul : INVALIDE une fois sur deux"""
    banque = monnaie.Banque()
    bases = '1' + '0' * (n - 1)
    billet = banque.emettre(n, rng, bases=bases)
    billet = monnaie.espionner_qubit(billet, 0, 'computational', rng)
    return not banque.verifier(billet, rng).valide


def _essai_billet_aleatoire(n, rng):
    banque = monnaie.Banque()
    billet = banque.emettre(n, rng)
    contrefacon = monnaie.billet_aleatoire(billet.serie, n, rng)
    return banque.verifier(contrefacon, rng).valide


def _essai_devine_mesure(n, rng):
    banque = monnaie.Banque(monnaie.PolitiqueBanque.RETOUR_TOUJOURS)
    billet = banque.emettre(n, rng)
    premiere, seconde = monnaie.attaque_devine_mesure(billet, rng)
    une = banque.verifier(premiere, rng).valide
    deux = une and banque.verifier(seconde, rng).valide
    return une, deux


def _essai_adaptatif(n, politique, rng):
    banque = monnaie.Banque(politique)
    billet = banque.emettre(n, rng)
    resultat = monnaie.attaque_adaptative(banque, billet, rng)
    reussite = resultat.complete and resultat.correspond(banque.enregistrement_secret(billet.serie))
    return reussite, resultat.appels_verification, resultat.interrompue


def _oracle_marque(n, marque):
    return Oracle(n, 1, functools.partial(_est_marque, marque), ModeOracle.XOR)


def _est_marque(marque, x):
    return int(x == marque)


def _essai_grover(n, iterations, marque, rng):
    resultat = recherche_grover(_oracle_marque(n, marque), n, iterations, rng)
    return int(resultat.trouve, 2) == marque


def _essai_naif(n, marque, rng, facteur=FACTEUR_PLAFOND_NAIF):
    """
    Requêtes jusqu'au premier succès de la recherche naïve

    Au-delà de MAX_QUBITS_NAIF_SIMULE, le nombre de requêtes est tiré de sa loi
    géométrique de paramètre 2^-n au lieu d'être simulé.

    Returns:
        tuple: (requêtes, succès) ; succès vaut False si le plafond de
        facteur · 2^n tentatives est atteint
    """
    if n > MAX_QUBITS_NAIF_SIMULE:
        return int(rng.geometric(2.0 ** -n)), True
    oracle = _oracle_marque(n, marque)
    for _ in range(facteur << n):
        if recherche_naive(oracle, n, rng).trouve is not None:
            return oracle.compteur_requetes, True
    return oracle.compteur_requetes, False


def _entiers_gradient(taille):
    """Composantes entières dans [-taille/2, taille/2), lisibles exactement sur n bits"""
    return tuple(math.floor(fraction * taille) for fraction in FRACTIONS_GRADIENT)


def _lineaire(g, x):
    return float(np.dot(g, x))


def _septiemes(x):
    return x / 7


def _demi(x):
    return 0.5


def _essai_eclair(k, rng):
    schema = monnaie.schema_jouet(k, 4)
    p, billet = monnaie.emettre_eclair(schema, rng)
    return monnaie.verifier_eclair(schema, p, billet, 8, rng).accepte


def _essai_contrefacon_eclair(k, rng):
    """Un état de base classique, un seul tour avec la translation"""
    schema = monnaie.schema_jouet(k, 4)
    g = int(rng.integers(0, schema.taille))
    etat = etat_base(format(g, f'0{k}b'))
    return monnaie.verifier_eclair(schema, g % 4, etat, 1, rng).accepte


def _phase_diagonale(phi):
    """Unitaire diag(1, e^{2πiϕ}) et son vecteur propre |1⟩"""
    return np.diag([1.0, np.exp(2j * np.pi * phi)]), KET_1


def obtenir_gestionnaire_experiences():
    """
    Fonction utilitaire pour obtenir l'instance du gestionnaire

    Returns:
        GestionnaireExperiences: Instance unique du gestionnaire
    """
    return GestionnaireExperiences()
