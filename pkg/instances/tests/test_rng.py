from django.test import SimpleTestCase

from instances.rng import MODULUS, LehmerStream, RngState, lehmer_next


class LehmerTests(SimpleTestCase):

    def test_first_values_from_seed_one(self):
        stream = LehmerStream(1)
        self.assertEqual([stream.raw() for _ in range(3)], [16807, 282475249, 1622650073])

    def test_ten_thousandth_value(self):
        # standard minimal-standard check value
        stream = LehmerStream(1)
        for _ in range(9999):
            stream.raw()
        self.assertEqual(stream.raw(), 1043618065)

    def test_pure_step(self):
        state, value = lehmer_next(RngState(1))
        self.assertEqual(value, 16807)
        self.assertEqual(state, RngState(16807))

    def test_seed_reduction(self):
        self.assertEqual(RngState.from_seed(0).state, 1)
        self.assertEqual(RngState.from_seed(MODULUS).state, 1)
        self.assertEqual(RngState.from_seed(MODULUS + 5).state, 5)

    def test_state_range(self):
        with self.assertRaises(ValueError):
            RngState(0)
        with self.assertRaises(ValueError):
            RngState(MODULUS)

    def test_derived_draws(self):
        stream = LehmerStream(42)
        for _ in range(200):
            self.assertTrue(1 <= stream.cost() <= 100)
            self.assertTrue(0 <= stream.below(7) < 7)
            self.assertTrue(0.0 < stream.uniform() < 1.0)

    def test_shuffle_is_a_deterministic_permutation(self):
        first, second = list(range(10)), list(range(10))
        LehmerStream(9).shuffle(first)
        LehmerStream(9).shuffle(second)
        self.assertEqual(first, second)
        self.assertEqual(sorted(first), list(range(10)))
