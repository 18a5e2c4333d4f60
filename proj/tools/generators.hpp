#pragma once

#include <cstdint>
#include <string>

#include "slpedit/slp.hpp"

namespace slpedit::gen {

/// F_1 = first, F_2 = second, F_k = F_{k-1} F_{k-2}; exactly `order` rules.
Slp fibonacci(std::uint32_t order, char first = 'a', char second = 'b');

/// symbol^N by doubling, with one extra rule per set bit below the top one.
Slp power(std::uint64_t N, char symbol = 'a');

/// motif^repeats, LZ78-encoded.
Slp motif(const std::string& motif, std::uint64_t repeats);

/// Uniform text over `alphabet`.
std::string random_text(std::uint64_t length, const std::string& alphabet, std::uint64_t seed);

}  // namespace slpedit::gen

#include <random>
#include <string_view>

#include "slpedit/scoring.hpp"

namespace slpedit::gen {

enum class Encoder { Naive, Lz78, Rle };

Encoder parse_encoder(std::string_view name);
std::string_view encoder_name(Encoder e);
Slp encode(Encoder e, std::string_view text);

/// First `size` symbols of a fixed pool of printable letters.
std::string alphabet_of_size(std::size_t size);

/// Text mixing uniform stretches, runs and mutated motif repeats, so that
/// every encoder finds something to share.
std::string repetitive_text(std::mt19937_64& rng, std::size_t length, const std::string& alphabet);

/// Costs uniform in [0, max_cost], sub(a, a) = 0.
ScoringScheme random_scheme(std::mt19937_64& rng, const std::string& alphabet, Cost max_cost = 9);

}  // namespace slpedit::gen
