# Independent SplitMix64 reference used to freeze RNG test vectors.
M = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & M

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & M
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M
        return z ^ (z >> 31)

    def below(self, n):
        floor = (1 << 64) % n
        while True:
            r = self.next()
            if r >= floor:
                return r % n


def sample_seed(seed, i):
    return SplitMix64(seed ^ ((i * 0xD1B54A32D192ED03) & M)).next()


if __name__ == "__main__":
    r = SplitMix64(0)
    print("seed 0:", [hex(r.next()) for _ in range(3)])
    r = SplitMix64(1234567)
    print("seed 1234567:", [hex(r.next()) for _ in range(3)])
    r = SplitMix64(42)
    print("below(7) seed 42:", [r.below(7) for _ in range(8)])
    print("sample_seed(1, 0..2):", [hex(sample_seed(1, i)) for i in range(3)])
