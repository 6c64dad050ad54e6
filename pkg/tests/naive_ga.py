"""Deliberately naive reference GA used as the behavioral oracle.

This is a literal, line-by-line transcription of the classic fixed-array
C++ loops this engine reimplements: python lists at hard capacity 100,
per-bit reads and writes, an adjacent-swap bubble sort, a linear roulette
scan with early exit, and the verbatim mutation quirk (both gates writing
the b half of the even-indexed individual). No numpy, no vectorization,
no shortcuts; it must stay independent of the production kernels.

``strict_mutation=True`` applies the one-line correction the engine's
strict mode makes: the first mutation gate targets the a half.
"""

GPOPSIZE = 100


def bit_read(x, j):
    return (x >> j) & 1


def bit_write(x, j, bit):
    if bit:
        return x | (1 << j)
    return x & ~(1 << j) & 0xFFFF


class NaiveGa:
    def __init__(self, popsize, bitmutation, rng, strict_mutation=False):
        self.popsize = popsize
        self.bitmutation = bitmutation
        self.rng = rng
        self.strict_mutation = strict_mutation

        self.t0_fitness = [0] * GPOPSIZE
        self.top_fitness_val = 0
        self.sum_fitness_val = 0
        self.t1_a_population = [0] * GPOPSIZE
        self.t1_b_population = [0] * GPOPSIZE
        self.bestcandidate_a = 0
        self.bestcandidate_b = 0
        self.t0_a_population = [0] * GPOPSIZE
        self.t0_b_population = [0] * GPOPSIZE
        self.next_gen_expected_count = [0] * GPOPSIZE

        self.randomize_t0_population()

    # the bare generator call on the 16-bit target truncates to unsigned int
    def random(self):
        return self.rng.next_u16()

    def random_range(self, lo, hi):
        return self.rng.draw_range(lo, hi)

    def randomize_t0_population(self):
        for i in range(self.popsize):
            rand_number_a = self.random()
            self.t0_a_population[i] = rand_number_a
        for i in range(self.popsize):
            rand_number_a = self.random()
            self.t0_b_population[i] = rand_number_a

    def evaluate_t0_fitness(self):
        self.top_fitness_val = 0
        self.sum_fitness_val = 0
        for i in range(self.popsize):
            self.sum_fitness_val = self.t0_fitness[i] + self.sum_fitness_val
            if self.t0_fitness[i] > self.top_fitness_val:
                self.top_fitness_val = self.t0_fitness[i]
                self.bestcandidate_a = self.t0_a_population[i]
                self.bestcandidate_b = self.t0_b_population[i]

    def expected_count_t1(self):
        for x in range(self.popsize - 1):
            for y in range(self.popsize - x - 1):
                if self.t0_fitness[y] > self.t0_fitness[y + 1]:
                    t = self.t0_fitness[y]
                    a = self.t0_a_population[y]
                    b = self.t0_b_population[y]
                    self.t0_fitness[y] = self.t0_fitness[y + 1]
                    self.t0_fitness[y + 1] = t
                    self.t0_a_population[y] = self.t0_a_population[y + 1]
                    self.t0_a_population[y + 1] = a
                    self.t0_b_population[y] = self.t0_b_population[y + 1]
                    self.t0_b_population[y + 1] = b
        current_value = 0
        for i in range(self.popsize):
            current_value = current_value + self.t0_fitness[i]
            self.next_gen_expected_count[i] = current_value

    def populate_t1(self):
        for i in range(self.popsize):
            random_value = self.random_range(0, self.next_gen_expected_count[self.popsize - 1])
            select_index = 0
            for j in range(1, self.popsize):
                if (
                    random_value >= self.next_gen_expected_count[j - 1]
                    and random_value < self.next_gen_expected_count[j]
                ):
                    select_index = j
                    break
            self.t1_a_population[i] = self.t0_a_population[select_index]
            self.t1_b_population[i] = self.t0_b_population[select_index]

    def mate_t1(self):
        i = 0
        while i < self.popsize:
            crossover_site = self.random_range(0, 31)

            random_mutation_a = self.random_range(1, 1000)
            random_mutation_b = self.random_range(1, 1000)
            if random_mutation_a <= self.bitmutation:
                if self.strict_mutation:
                    self.t1_a_population[i] = self.random()
                else:
                    self.t1_b_population[i] = self.random()
            if random_mutation_b <= self.bitmutation:
                self.t1_b_population[i] = self.random()

            if crossover_site < 16:
                crossover_site_a = crossover_site
                crossover_site_b = 0
            else:
                crossover_site_a = 16
                crossover_site_b = 32 - crossover_site

            for j in range(crossover_site_a, 16):
                site_a = bit_read(self.t1_a_population[i], j)
                site_b = bit_read(self.t1_a_population[i + 1], j)
                self.t1_a_population[i] = bit_write(self.t1_a_population[i], j, site_b)
                self.t1_a_population[i + 1] = bit_write(self.t1_a_population[i + 1], j, site_a)

            for j in range(crossover_site_b, 16):
                site_a = bit_read(self.t1_b_population[i], j)
                site_b = bit_read(self.t1_b_population[i + 1], j)
                self.t1_b_population[i] = bit_write(self.t1_b_population[i], j, site_b)
                self.t1_b_population[i + 1] = bit_write(self.t1_b_population[i + 1], j, site_a)

            i += 2

    def process_generation(self):
        self.evaluate_t0_fitness()
        self.expected_count_t1()
        self.populate_t1()
        self.mate_t1()

    def prepare_next_generation(self):
        for i in range(self.popsize):
            self.t0_a_population[i] = self.t1_a_population[i]
            self.t0_b_population[i] = self.t1_b_population[i]
