#pragma once

#include <string>

#include <json.hpp>

#include "xprod/crossed.hpp"
#include "xprod/freeness.hpp"
#include "xprod/nc_partition.hpp"

namespace xprod {

using Json = nlohmann::ordered_json;

// Machine forms. Partitions are arrays of blocks ([[1,4],[2,3],[5]]), words
// are arrays of [factor, exponent] pairs, exact scalars are strings like
// "1/2" or "1/2+3*i", floating scalars are [re, im] number pairs, matrices
// carry a shape/mode header, elements a context header plus canonical-order
// terms.
Json partition_to_json(const NCPartition& pi);
NCPartition partition_from_json(const Json& j);

Json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const Json& j);

Json word_to_json(const GroupWord& w);
GroupWord word_from_json(const GroupSpec& spec, const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, ScalarMode mode);

Json matrix_to_json(const CoeffMatrix& m, bool with_header = true);
// Parses either the full headered form or a bare entries array (shape,
// dim and mode then come from the expected_* arguments).
CoeffMatrix matrix_from_json(const Json& j, MatShape expected_shape, int expected_dim,
                             ScalarMode expected_mode);

Json element_to_json(const CrossedElement& x);
CrossedElement element_from_json(const ContextPtr& ctx, const Json& j);

Json freeness_report_to_json(const FreenessReport& r);

// Serializes with doubles printed at 17 significant digits, keys in
// insertion order, no whitespace surprises: byte-identical for equal
// documents.
std::string dump_report(const Json& j);

}  // namespace xprod
