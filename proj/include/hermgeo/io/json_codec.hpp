#pragma once

#include <json.hpp>

#include "hermgeo/configuration.hpp"
#include "hermgeo/geodesic.hpp"
#include "hermgeo/hermitian.hpp"
#include "hermgeo/projective.hpp"

namespace hermgeo::io {

using json = nlohmann::json;

// Scalars are [re, im] pairs or bare numbers. Encoding writes bare numbers
// for real-field data and pairs otherwise.

Scalar scalar_from_json(const json& j);
json scalar_to_json(Scalar s, Field field);

Vec vector_from_json(const json& j);
json vector_to_json(const Vec& v, Field field);

Mat matrix_from_json(const json& j);
json matrix_to_json(const Mat& m, Field field);

Field field_from_json(const json& j);

/// {"field": "R"|"C", "gram": [[...]], "metric_sign": 1|-1}
HermitianSpace space_from_json(const json& j, Tolerance tol = {});
json space_to_json(const HermitianSpace& space);

/// {"rep": [...]} or a bare vector.
ProjectivePoint point_from_json(const SpacePtr& space, const json& j);
json point_to_json(const ProjectivePoint& p);

/// {"at": point, "dir": [...]}
TangentVector tangent_from_json(const SpacePtr& space, const json& j);
json tangent_to_json(const TangentVector& t);

/// {"span": [vector, vector]}
Geodesic geodesic_from_json(const SpacePtr& space, const json& j);
json geodesic_to_json(const Geodesic& g);

/// {"points": [vector, ...]} or a bare list of vectors.
Configuration configuration_from_json(const SpacePtr& space, const json& j);
json configuration_to_json(const Configuration& c);

json signature_to_json(const Signature& s);

}  // namespace hermgeo::io
