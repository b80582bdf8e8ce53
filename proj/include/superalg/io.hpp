#pragma once

#include "superalg/catalog.hpp"
#include "superalg/errors.hpp"

#include "json.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace superalg::io {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;
inline constexpr std::string_view kExtension = ".lsa.json";

// ParseError or InvariantViolation raised while reading a document. `line`
// is 1-based; for problems found after the JSON itself parsed it is the
// first line holding the offending token (0 when none could be located).
class DocumentError : public AlgebraError {
public:
    DocumentError(ErrorCode code, std::size_t line, const std::string& reason);
    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

struct Document {
    LieSuperalgebra algebra;
    std::map<std::string, BilinearForm> forms;
    std::map<std::string, LinearMap> maps;
    Json metadata = Json::object();

    friend bool operator==(const Document&, const Document&) = default;
};

// Canonical text: sorted keys, two-space indentation, trailing newline,
// rationals as "p/q" or "p", matrices as row lists.
std::string save(const Document& doc);
Document load(std::string_view text);

Document load_file(const std::filesystem::path& path);
// Whole file as text; DocumentError(ParseError) when it cannot be read.
std::string read_file(const std::filesystem::path& path);
void save_file(const std::filesystem::path& path, const std::string& text);

// Building blocks shared with the parameter files.
Json scalar_json(const Scalar& x);
Json vector_json(const Vec& v);
Json matrix_json(const Matrix& m);

// Catalog entries travel with their expected properties, the role of each
// form and map, and (for A_n) the associative product in the metadata.
Document to_document(const CatalogEntry& entry);
CatalogEntry to_entry(const Document& doc);

// Construction parameters: maps over the base basis, vectors, scalars,
// string options and subspaces (lists of spanning vectors).
struct ParamsDocument {
    std::string kind;
    std::map<std::string, LinearMap> maps;
    std::map<std::string, Vec> vectors;
    std::map<std::string, Scalar> scalars;
    std::map<std::string, std::string> options;
    std::map<std::string, std::vector<Vec>> subspaces;

    friend bool operator==(const ParamsDocument&, const ParamsDocument&) = default;
};

std::string save_params(const ParamsDocument& params);
// Maps and vectors are checked against `base`.
ParamsDocument load_params(std::string_view text, const GradedBasis& base);

}  // namespace superalg::io
