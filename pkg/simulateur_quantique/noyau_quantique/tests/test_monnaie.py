"""
Tests du schéma de Wiesner, des attaques, du jeu de sécurité et de la monnaie éclair
"""

import math

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from noyau_quantique import monnaie
from noyau_quantique.erreurs import ErreurDimension, ErreurParametres, ErreurSerieInconnue
from noyau_quantique.essais import executer_essais, generateur
from noyau_quantique.etats import (
    KET_0,
    KET_1,
    KET_MOINS,
    KET_PLUS,
    VecteurEtat,
    etat_base,
    produit_tensoriel_multiple,
)
from noyau_quantique.monnaie import PolitiqueBanque, Verdict


class EmissionTests(SimpleTestCase):
    """Tests de l'émission et de la vérification honnête"""

    def setUp(self):
        self.rng = generateur(42)
        self.banque = monnaie.Banque()

    def test_encodage(self):
        self.assertIs(monnaie.encoder_qubit(0, 0), KET_0)
        self.assertIs(monnaie.encoder_qubit(1, 0), KET_1)
        self.assertIs(monnaie.encoder_qubit(0, 1), KET_PLUS)
        self.assertIs(monnaie.encoder_qubit(1, 1), KET_MOINS)

    def test_exemple_cinq_qubits(self):
        """Bits 01011 et bases 11001 : |+⟩|−⟩|0⟩|1⟩|−⟩"""
        billet = self.banque.emettre(5, self.rng, bits='01011', bases='11001')
        attendu = produit_tensoriel_multiple(KET_PLUS, KET_MOINS, KET_0, KET_1, KET_MOINS)
        self.assertTrue(produit_tensoriel_multiple(*billet.qubits).proche(attendu))
        self.assertEqual(self.banque.verifier(billet, self.rng).verdict, Verdict.VALIDE)

    def test_completude(self):
        for _ in range(200):
            billet = self.banque.emettre(8, self.rng)
            self.assertTrue(self.banque.verifier(billet, self.rng).valide)

    def test_series_distinctes(self):
        premier = self.banque.emettre(3, self.rng)
        second = self.banque.emettre(3, self.rng)
        self.assertNotEqual(premier.serie, second.serie)

    def test_serie_inconnue(self):
        billet = monnaie.billet_aleatoire('X00000001', 3, self.rng)
        with self.assertRaises(ErreurSerieInconnue):
            self.banque.verifier(billet, self.rng)

    def test_longueur_differente(self):
        billet = self.banque.emettre(4, self.rng)
        tronque = monnaie.BilletWiesner(billet.serie, billet.qubits[:3])
        self.assertEqual(self.banque.verifier(tronque, self.rng).verdict, Verdict.INVALIDE)

    def test_taille_invalide(self):
        with self.assertRaises(ErreurDimension):
            self.banque.emettre(0, self.rng)

    def test_espion_perturbe(self):
        """Mesurer |+⟩ en base de calcul fait échouer la vérification une fois sur deux"""
        invalides = 0
        for _ in range(2000):
            billet = self.banque.emettre(1, self.rng, bits='0', bases='1')
            billet = monnaie.espionner_qubit(billet, 0, 'computational', self.rng)
            invalides += not self.banque.verifier(billet, self.rng).valide
        self.assertLess(abs(invalides / 2000 - 0.5), 3 * math.sqrt(0.25 / 2000))


class PolitiqueTests(SimpleTestCase):
    """Tests des politiques de retour de la banque"""

    def setUp(self):
        self.rng = generateur(42)

    def _contrefacon(self, banque):
        billet = banque.emettre(3, self.rng, bits='000', bases='000')
        return billet.appliquer(0, np.array([[0, 1], [1, 0]]))

    def test_retour_toujours(self):
        banque = monnaie.Banque(PolitiqueBanque.RETOUR_TOUJOURS)
        reponse = banque.verifier(self._contrefacon(banque), self.rng)
        self.assertEqual(reponse.verdict, Verdict.INVALIDE)
        self.assertIsNotNone(reponse.billet)

    def test_retour_si_valide(self):
        banque = monnaie.Banque(PolitiqueBanque.RETOUR_SI_VALIDE)
        reponse = banque.verifier(self._contrefacon(banque), self.rng)
        self.assertIsNone(reponse.billet)

    def test_reemission(self):
        """Un billet valide est remplacé par un billet neuf de même série"""
        banque = monnaie.Banque('reissue')
        billet = banque.emettre(6, self.rng)
        reponse = banque.verifier(billet, self.rng)
        self.assertTrue(reponse.valide)
        self.assertEqual(reponse.billet.serie, billet.serie)
        self.assertTrue(banque.verifier(reponse.billet, self.rng).valide)
        self.assertEqual(banque.appels_verification, 2)


class AttaquesTests(SimpleTestCase):
    """Tests des attaques de contrefaçon"""

    def setUp(self):
        self.rng = generateur(42)

    def test_devine_mesure_statistique(self):
        """Une copie est acceptée avec probabilité (3/4)^n"""
        def essai(rng):
            banque = monnaie.Banque()
            premiere, _ = monnaie.attaque_devine_mesure(banque.emettre(2, rng), rng)
            return banque.verifier(premiere, rng).valide

        acceptes = sum(executer_essais(essai, 42, 2000))
        p = 0.75 ** 2
        self.assertLess(abs(acceptes / 2000 - p), 3 * math.sqrt(p * (1 - p) / 2000))

    def test_devine_mesure_deux_copies(self):
        banque = monnaie.Banque()
        premiere, seconde = monnaie.attaque_devine_mesure(banque.emettre(4, self.rng), self.rng)
        self.assertEqual(premiere.serie, seconde.serie)
        self.assertEqual(premiere, seconde)

    def test_adaptative_retour_toujours(self):
        """n + 1 vérifications suffisent à reconstituer le billet"""
        for n in (1, 5, 12):
            banque = monnaie.Banque(PolitiqueBanque.RETOUR_TOUJOURS)
            billet = banque.emettre(n, self.rng)
            resultat = monnaie.attaque_adaptative(banque, billet, self.rng)
            self.assertTrue(resultat.complete)
            self.assertTrue(resultat.correspond(banque.enregistrement_secret(billet.serie)))
            self.assertEqual(resultat.appels_verification, n + 1)

    def test_adaptative_confisquee(self):
        banque = monnaie.Banque(PolitiqueBanque.RETOUR_SI_VALIDE)
        billet = banque.emettre(4, self.rng, bases='0000')
        resultat = monnaie.attaque_adaptative(banque, billet, self.rng)
        self.assertTrue(resultat.interrompue)
        self.assertFalse(resultat.complete)
        self.assertEqual(resultat.appels_verification, 1)

    def test_copie_fabriquee_valide(self):
        banque = monnaie.Banque(PolitiqueBanque.RETOUR_TOUJOURS)
        billet = banque.emettre(6, self.rng)
        resultat = monnaie.attaque_adaptative(banque, billet, self.rng)
        copie = monnaie.fabriquer_copie(billet.serie, resultat.bits, resultat.bases)
        self.assertTrue(banque.verifier(copie, self.rng).valide)


class JeuSecuriteTests(SimpleTestCase):
    """Tests du jeu de sécurité"""

    def test_honnete_ne_gagne_jamais(self):
        resultat = monnaie.jeu_securite(monnaie.AdversaireHonnete(), 2, 3, 50, 42)
        self.assertEqual(resultat.victoires, 0)
        self.assertEqual(resultat.essais, 50)

    def test_adaptatif_gagne_contre_retour_toujours(self):
        resultat = monnaie.jeu_securite(
            monnaie.AdversaireAdaptatif(), 1, 2, 30, 42, PolitiqueBanque.RETOUR_TOUJOURS
        )
        self.assertEqual(resultat.frequence, 1.0)

    def test_reproductible(self):
        adversaire = monnaie.ADVERSAIRES['devine-mesure']()
        premier = monnaie.jeu_securite(adversaire, 1, 2, 100, 7, taille_billet=2)
        second = monnaie.jeu_securite(adversaire, 1, 2, 100, 7, taille_billet=2)
        self.assertEqual(premier, second)

    def test_parametres_invalides(self):
        with self.assertRaises(ErreurParametres):
            monnaie.jeu_securite(monnaie.AdversaireHonnete(), 0, 1, 10, 42)


class ClonageTests(SimpleTestCase):
    """Tests du copieur CNOT"""

    def test_etats_de_base_copies(self):
        self.assertAlmostEqual(monnaie.fidelite_clonage(KET_0), 1.0, places=12)
        self.assertAlmostEqual(monnaie.fidelite_clonage(KET_1), 1.0, places=12)

    def test_superposition_intriquee(self):
        self.assertAlmostEqual(monnaie.fidelite_clonage(KET_PLUS), 0.5, places=12)
        bell = VecteurEtat(np.array([1, 0, 0, 1]) / np.sqrt(2))
        self.assertTrue(monnaie.copieur_cnot(KET_PLUS).proche(bell))

    @settings(deadline=None, max_examples=50)
    @given(
        st.floats(min_value=0.0, max_value=math.pi / 2),
        st.floats(min_value=0.0, max_value=2 * math.pi),
    )
    def test_fidelite_forme_close(self, theta, phase):
        """|α|⁴ + |β|⁴"""
        alpha, beta = math.cos(theta), math.sin(theta) * np.exp(1j * phase)
        etat = VecteurEtat([alpha, beta])
        self.assertAlmostEqual(
            monnaie.fidelite_clonage(etat), abs(alpha) ** 4 + abs(beta) ** 4, places=10
        )


class MonnaieEclairTests(SimpleTestCase):
    """Tests de l'instanciation jouet de la monnaie éclair"""

    def setUp(self):
        self.rng = generateur(42)
        self.schema = monnaie.schema_jouet(5, 4)

    def test_billet_uniforme(self):
        p, billet = monnaie.emettre_eclair(self.schema, self.rng)
        preimage = self.schema.preimage(p)
        self.assertEqual(preimage.size, 8)
        attendu = np.zeros(32)
        attendu[preimage] = 1 / math.sqrt(8)
        np.testing.assert_allclose(billet.amplitudes, attendu, atol=1e-12)

    def test_billet_emis_accepte(self):
        for _ in range(20):
            p, billet = monnaie.emettre_eclair(self.schema, self.rng)
            resultat = monnaie.verifier_eclair(self.schema, p, billet, 10, self.rng)
            self.assertTrue(resultat.accepte)
            self.assertEqual(resultat.tours_reussis, 10)

    def test_etat_de_base_rejete(self):
        """Un état classique passe chaque tour avec probabilité 1/2"""
        acceptes = sum(
            monnaie.verifier_eclair(self.schema, 3, etat_base('00011'), 1, self.rng).accepte
            for _ in range(2000)
        )
        self.assertLess(abs(acceptes / 2000 - 0.5), 3 * math.sqrt(0.25 / 2000))

    def test_mouvement_invalide(self):
        echange = np.arange(8)
        echange[[0, 1]] = echange[[1, 0]]
        with self.assertRaises(ErreurParametres):
            monnaie.SchemaEclair(3, lambda g: g % 4, [echange])

    def test_modulo_invalide(self):
        with self.assertRaises(ErreurParametres):
            monnaie.schema_jouet(3, 3)

    def test_invariant_constant(self):
        """f constante : le billet est uniforme sur tout G et passe toujours"""
        schema = monnaie.SchemaEclair(4, lambda g: 0, [(np.arange(16) + 1) % 16])
        p, billet = monnaie.emettre_eclair(schema, self.rng)
        self.assertEqual(p, 0)
        np.testing.assert_allclose(billet.amplitudes, np.full(16, 0.25), atol=1e-12)
        self.assertTrue(monnaie.verifier_eclair(schema, p, billet, 10, self.rng).accepte)

    def test_invariant_identite(self):
        """f identité : seul le mouvement trivial convient, le billet est |p⟩"""
        schema = monnaie.SchemaEclair(3, lambda g: g, [np.arange(8)])
        for _ in range(10):
            p, billet = monnaie.emettre_eclair(schema, self.rng)
            self.assertTrue(billet.proche(etat_base(format(p, '03b'))))
            self.assertTrue(monnaie.verifier_eclair(schema, p, billet, 5, self.rng).accepte)
        with self.assertRaises(ErreurParametres):
            monnaie.SchemaEclair(3, lambda g: g, [(np.arange(8) + 1) % 8])
