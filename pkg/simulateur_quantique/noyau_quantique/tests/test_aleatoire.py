"""
Tests des générateurs de nombres aléatoires et du rapport d'uniformité
"""

import numpy as np
from django.test import SimpleTestCase

from noyau_quantique import aleatoire
from noyau_quantique.aleatoire import LCG_MAUVAIS, LCG_STANDARD_MINIMAL, FluxBits, ParametresLCG
from noyau_quantique.erreurs import ErreurParametres
from noyau_quantique.essais import generateur
from noyau_quantique.etats import KET_PLUS


class LCGTests(SimpleTestCase):
    """Tests du générateur congruentiel linéaire"""

    def test_standard_minimal(self):
        valeurs = aleatoire.suite_lcg(LCG_STANDARD_MINIMAL, 1, 10000)
        self.assertEqual(int(valeurs[0]), 16807)
        self.assertEqual(int(valeurs[1]), 282475249)
        self.assertEqual(int(valeurs[-1]), 1043618065)

    def test_pas_unique(self):
        self.assertEqual(aleatoire.lcg_suivant(ParametresLCG(a=3, c=1, m=10), 4), 3)

    def test_parametres_invalides(self):
        for a, c, m in ((1, 0, 0), (10, 1, 10), (2, -1, 10), (-1, 0, 5)):
            with self.assertRaises(ErreurParametres):
                ParametresLCG(a=a, c=c, m=m)

    def test_etat_hors_bornes(self):
        with self.assertRaises(ErreurParametres):
            aleatoire.lcg_suivant(LCG_MAUVAIS, 256)

    def test_periode_pleine(self):
        """c impair et a − 1 multiple de 4 : période 256"""
        self.assertEqual(aleatoire.premier_retour(LCG_MAUVAIS, 0, 300), 256)
        self.assertIsNone(aleatoire.premier_retour(LCG_MAUVAIS, 0, 100))

    def test_detecter_periode(self):
        valeurs = aleatoire.suite_lcg(LCG_MAUVAIS, 7, 1000)
        self.assertEqual(aleatoire.detecter_periode(valeurs), 256)
        self.assertIsNone(aleatoire.detecter_periode(np.arange(1000)))


class GenerateurQuantiqueTests(SimpleTestCase):
    """Tests du générateur quantique simulé"""

    def test_etat_avant_mesure(self):
        self.assertTrue(aleatoire.etat_qrng().proche(KET_PLUS))

    def test_bit(self):
        rng = generateur(42)
        bits = [aleatoire.bit_qrng(rng) for _ in range(50)]
        self.assertTrue(set(bits) <= {0, 1})

    def test_flux_rejouable(self):
        premier = FluxBits('qrng', 9).bits(200)
        second = FluxBits('qrng', 9).bits(200)
        np.testing.assert_array_equal(premier, second)
        self.assertNotEqual(int(premier.sum()), 0)

    def test_valeurs_octets_centres(self):
        valeurs = FluxBits('qrng', 3).valeurs(100)
        self.assertTrue(np.all(valeurs > 0) and np.all(valeurs < 1))
        np.testing.assert_allclose((valeurs * 256 - 0.5) % 1, 0.0, atol=1e-12)


class FluxLCGTests(SimpleTestCase):

    def test_continuite(self):
        """Deux tirages successifs prolongent la même suite"""
        flux = FluxBits('lcg', 1)
        debut = flux.entiers(3)
        suite = flux.entiers(2)
        np.testing.assert_array_equal(
            np.concatenate([debut, suite]), aleatoire.suite_lcg(LCG_STANDARD_MINIMAL, 1, 5)
        )
        self.assertEqual(flux.emis, 5)

    def test_bits_moitie_superieure(self):
        flux = FluxBits('lcg', 0, LCG_MAUVAIS)
        entiers = aleatoire.suite_lcg(LCG_MAUVAIS, 0, 20)
        np.testing.assert_array_equal(flux.bits(20), (entiers >= 128).astype(int))


class RapportUniformiteTests(SimpleTestCase):
    """Tests du rapport d'uniformité"""

    def test_echantillon_regulier(self):
        valeurs = (np.arange(1600) + 0.5) / 1600
        rapport = aleatoire.rapport_uniformite(valeurs)
        self.assertEqual(rapport.n, 1600)
        self.assertAlmostEqual(rapport.moyenne, 0.5)
        self.assertAlmostEqual(rapport.khi2, 0.0)
        self.assertTrue(rapport.uniforme)
        self.assertIsNone(rapport.periode)
        self.assertEqual(sorted(rapport.autocorrelations), list(range(1, 17)))

    def test_serie_constante(self):
        rapport = aleatoire.rapport_uniformite(np.full(600, 0.3))
        self.assertIsNone(rapport.autocorrelations[1])
        self.assertEqual(rapport.periode, 1)
        self.assertFalse(rapport.uniforme)

    def test_lcg_mauvais_periodique(self):
        valeurs = aleatoire.suite_lcg(LCG_MAUVAIS, 0, 2000) / LCG_MAUVAIS.m
        self.assertEqual(aleatoire.rapport_uniformite(valeurs).periode, 256)

    def test_echantillon_trop_court(self):
        with self.assertRaises(ErreurParametres):
            aleatoire.rapport_uniformite(np.full(499, 0.5))

    def test_valeurs_hors_intervalle(self):
        valeurs = np.full(600, 0.5)
        valeurs[10] = 1.0
        with self.assertRaises(ErreurParametres):
            aleatoire.rapport_uniformite(valeurs)


class FormatFluxTests(SimpleTestCase):

    def test_decimal(self):
        self.assertEqual(aleatoire.lignes_decimales(np.array([16807, 3])), ['16807', '3'])

    def test_hexadecimal(self):
        self.assertEqual(aleatoire.lignes_hexadecimales([1, 0, 1, 0]), ['a'])
        self.assertEqual(aleatoire.lignes_hexadecimales([1, 0, 1, 0, 1, 1]), ['ac'])
        self.assertEqual(aleatoire.lignes_hexadecimales([1] * 64), ['f' * 16])
        self.assertEqual(aleatoire.lignes_hexadecimales([1] * 65), ['f' * 16, '8'])
