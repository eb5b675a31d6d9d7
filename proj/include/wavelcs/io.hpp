#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "wavelcs/errors.hpp"
#include "wavelcs/sequence.hpp"

namespace wavelcs {

enum class InputFormat : std::uint8_t { Plain, Fasta };

/// .fa and .fasta map to FASTA, anything else to PLAIN.
InputFormat format_from_path(const std::filesystem::path& path) noexcept;

/// Loads a sequence from disk. PLAIN keeps all bytes minus ASCII whitespace;
/// FASTA takes the first record (see parse_fasta). An empty result is valid.
/// With validate_dna set, every symbol must be one of A, C, G, T; the error
/// names the first offending byte and its offset in the loaded sequence.
Sequence load_sequence(const std::filesystem::path& path, InputFormat format,
                       bool validate_dna = false);

/// First FASTA record: the sequence lines after the first '>' header up to
/// the next '>' or end of input, whitespace stripped, letters uppercased.
/// Throws InputError when sequence data precedes the header or no header
/// exists at all.
Sequence parse_fasta(std::string_view bytes);

/// Deterministic sequence of `length` symbols drawn uniformly from
/// `alphabet` with std::mt19937_64: symbol k is alphabet[next() % |alphabet|].
/// Identical arguments yield identical output on every platform.
/// Throws std::invalid_argument for an empty alphabet.
Sequence generate_random(std::size_t length, const Sequence& alphabet, std::uint64_t seed);

/// Writes the raw symbol bytes, no decoration.
void write_plain(const Sequence& seq, const std::filesystem::path& path);

/// Throws InputError unless every symbol is in {A, C, G, T}.
void validate_dna_alphabet(const Sequence& seq);

}  // namespace wavelcs
