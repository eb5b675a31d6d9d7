#include "wavelcs/io.hpp"

#include <cctype>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wavelcs {

namespace {

bool is_ascii_space(char byte) noexcept {
    return byte == ' ' || byte == '\t' || byte == '\n' || byte == '\v' || byte == '\f' ||
           byte == '\r';
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw InputError("read failure on '" + path.string() + "'");
    }
    return std::move(buffer).str();
}

bool is_dna_symbol(char byte) noexcept {
    return byte == 'A' || byte == 'C' || byte == 'G' || byte == 'T';
}

}  // namespace

InputFormat format_from_path(const std::filesystem::path& path) noexcept {
    const auto ext = path.extension().string();
    if (ext == ".fa" || ext == ".fasta") {
        return InputFormat::Fasta;
    }
    return InputFormat::Plain;
}

Sequence load_sequence(const std::filesystem::path& path, InputFormat format,
                       bool validate_dna) {
    const std::string bytes = read_file(path);
    Sequence seq;
    if (format == InputFormat::Fasta) {
        seq = parse_fasta(bytes);
    } else {
        std::string stripped;
        stripped.reserve(bytes.size());
        for (const char byte : bytes) {
            if (!is_ascii_space(byte)) {
                stripped.push_back(byte);
            }
        }
        seq = Sequence(std::move(stripped));
    }
    if (validate_dna) {
        validate_dna_alphabet(seq);
    }
    return seq;
}

Sequence parse_fasta(std::string_view bytes) {
    std::string symbols;
    bool in_record = false;
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        std::size_t eol = bytes.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = bytes.size();
        }
        std::string_view line = bytes.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.front() == '>') {
            if (in_record) {
                break;  // first record only
            }
            in_record = true;
            continue;
        }
        for (const char byte : line) {
            if (is_ascii_space(byte)) {
                continue;
            }
            if (!in_record) {
                throw InputError("malformed FASTA: sequence data before the '>' header");
            }
            symbols.push_back(static_cast<char>(
                std::toupper(static_cast<unsigned char>(byte))));
        }
    }
    if (!in_record) {
        throw InputError("malformed FASTA: no '>' header found");
    }
    return Sequence(std::move(symbols));
}

Sequence generate_random(std::size_t length, const Sequence& alphabet, std::uint64_t seed) {
    if (alphabet.empty()) {
        throw std::invalid_argument("generate_random: alphabet must not be empty");
    }
    // mt19937_64 plus plain modulo: both are fully pinned by the standard,
    // so the same arguments reproduce the same bytes on any platform.
    std::mt19937_64 rng(seed);
    std::string symbols(length, '\0');
    for (auto& slot : symbols) {
        slot = alphabet[static_cast<std::size_t>(rng() % alphabet.size())];
    }
    return Sequence(std::move(symbols));
}

void write_plain(const Sequence& seq, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot open '" + path.string() + "' for writing");
    }
    out.write(seq.data(), static_cast<std::streamsize>(seq.size()));
    if (!out) {
        throw InputError("write failure on '" + path.string() + "'");
    }
}

void validate_dna_alphabet(const Sequence& seq) {
    for (std::size_t offset = 0; offset < seq.size(); ++offset) {
        if (!is_dna_symbol(seq[offset])) {
            throw InputError("symbol '" + std::string(1, seq[offset]) + "' at offset " +
                             std::to_string(offset) + " is outside the {A, C, G, T} alphabet");
        }
    }
}

}  // namespace wavelcs
