#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "cobkit/cob1.hpp"
#include "cobkit/cob2.hpp"

namespace cobkit {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using AnyCobordism = std::variant<Cobordism2, Cobordism1>;

/// Parses either cobordism kind from its JSON text and validates it;
/// throws ParseError naming the first violated invariant.
AnyCobordism parse_cobordism(const std::string& text);
AnyCobordism parse_cobordism_file(const std::string& path);

/// Canonical serialization: fixed key order, components sorted by their
/// smallest boundary index (closed components last, by genus), signs as
/// "+"/"-", loops as a count. Byte-stable for equal canonical forms.
std::string serialize(const Cobordism2& c);
std::string serialize(const Cobordism1& c);
std::string serialize(const AnyCobordism& c);

void write_cobordism_file(const std::string& path, const AnyCobordism& c);

/// Bipartite graph description (Graphviz dot): boundary points on each
/// side, component nodes labeled with genus or strand kind.
std::string to_dot(const Cobordism2& c);
std::string to_dot(const Cobordism1& c);
std::string to_dot(const AnyCobordism& c);

}  // namespace cobkit
