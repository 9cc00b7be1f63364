#include "cohomcheck/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cohomcheck {

std::string to_string(Status s) {
    switch (s) {
        case Status::kPass: return "pass";
        case Status::kFail: return "fail";
        case Status::kRefuted: return "refuted";
        case Status::kSkipped: return "skipped";
    }
    throw std::logic_error("unknown status");
}

bool VerificationReport::all_passed() const {
    return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) {
        return r.status == Status::kFail;
    });
}

std::size_t VerificationReport::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(),
                      [s](const ReportRow& r) { return r.status == s; }));
}

const std::map<std::string, std::string>& claim_registry() {
    static const std::map<std::string, std::string> registry = {
        {"determinantal.syzygies",
         "u*d1 + v*d2 + w*d3 = 0 and x*d1 + y*d2 + z*d3 = 0 for the minors "
         "d1 = v*z - w*y, d2 = w*x - u*z, d3 = u*y - v*x, while u*d1 + v*d2 != 0"},
        {"determinantal.lambda",
         "lambda_q = ((u*d1)^q + (v*d2)^q + (w*d3)^q)/p is an integer "
         "polynomial, homogeneous of multidegree (q,q,q,q)"},
        {"determinantal.bridge",
         "lambda_q*(d1*d2*d3)^(q-1) equals (u*v*w)^(3q-2) times the image of "
         "(1/p)((A+B)^q + (-A)^q + (-B)^q)*((A+B)*A*B)^(q-1) under "
         "A = z/w - x/u, B = x/u - y/v"},
        {"determinantal.certificate",
         "lambda_q*(d1*d2*d3)^(q-1) = c1*d1^(2q-1) + c2*d2^(2q-1) + "
         "c3*d3^(2q-1) with integer cofactors of the forced multidegree, "
         "supported on the bracket-family monomials"},
        {"determinantal.oracle",
         "an exact integer linear solve over all candidate cofactor monomials "
         "independently confirms the membership"},
        {"identity.zero",
         "(A+B)^(2k+1)*S1 - A^(2k+1)*S2 - B^(2k+1)*S3 = 0, where S1, S2, S3 "
         "are the double binomial sums in powers of T, T+B, T-A"},
        {"identity.cases",
         "each T^m coefficient of the identity, divided by C(k,m)*(A*B)^(k-m), "
         "vanishes coefficient-by-coefficient via the three binomial lemmas"},
        {"identity.decomposition",
         "(1/p)((-1)^k*(A+B)^(k+1) - A^(k+1) - B^(k+1))*(A*B*(A+B))^k = "
         "-(A+B)^(2k+1)*S1 + A^(2k+1)*S2 + B^(2k+1)*S3 with integer S_i "
         "when k = p^e - 1"},
        {"identity.family_support",
         "S1, S2, S3 lie in the integer spans of [T,A]^k*[T,B]^k, "
         "[T,B]^k*[T+B,A+B]^k, [T,A]^k*[T-A,A+B]^k"},
        {"binomial.divisibility",
         "p divides C(q-1+r, q-1) for q = p^e and 1 <= r <= q-1, by direct "
         "division and by base-p carry counting"},
        {"lemma.alternating_triple",
         "sum_{i=0}^{m} (-1)^i*C(2k+1,s+i)*C(k+i,k)*C(k+m-i,k) equals 0 for "
         "k+1-m <= s <= k and C(m+s-k-1,m)*C(2k+m+1,m+s) for s > k"},
        {"lemma.signed_transform",
         "sum_{j=0}^{s} (-1)^j*C(s,j)*C(a+j,k) = (-1)^s*C(a,k-s)"},
        {"lemma.positive_triple",
         "sum_{i=0}^{s} C(k-i,k-s)*C(k+i,k)*C(k+m-i,m) = "
         "C(k+m-s,m)*C(2k+m+1,s)"},
        {"certpair.alternating_triple",
         "the telescoping certificate behind the alternating triple sum holds "
         "at every lattice point of the sweep box"},
        {"certpair.signed_transform",
         "the telescoping certificate behind the signed transform holds at "
         "every lattice point of the sweep box"},
        {"certpair.positive_triple",
         "the telescoping certificate behind the positive triple sum holds at "
         "every lattice point of the sweep box"},
        {"torsion.annihilation",
         "p * lambda = u^p*x^p + v^p*y^p + w^p*z^p in Z[u..z]/(u*x+v*y+w*z), "
         "for lambda = ((u*x)^p + (v*y)^p + (w*z)^p)/p"},
        {"torsion.cofactors",
         "the graded pieces that could hold membership cofactors each contain "
         "exactly one normal-form monomial: u^p*y^k*z^k, v^p*x^k*z^k, "
         "w^p*x^k*y^k"},
        {"torsion.specialization",
         "(x^p + y^p + (-1)^p*(x+y)^p)/p has x^(p-1)*y coefficient (-1)^p, "
         "hence lies outside (p, x^p, y^p) Z[x,y]"},
        {"torsion.refutation",
         "lambda*(x*y*z)^k is not in (x^(p+k), y^(p+k), z^(p+k)) of "
         "Z[u..z]/(u*x+v*y+w*z): the integer system over the graded piece "
         "has no solution"},
        {"torsion.control",
         "the planted member (x*y*z)^k * x^(p+k) is recovered by the same "
         "membership oracle"},
    };
    return registry;
}

ReportRow make_row(const std::string& claim, Status status, std::string witness,
                   double millis) {
    ReportRow row;
    row.claim = claim;
    row.anchor = claim_registry().at(claim);
    row.status = status;
    row.witness = std::move(witness);
    row.millis = millis;
    return row;
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "cohomcheck " << r.tool_version << ": " << r.command << "\n";
    for (const auto& [key, value] : r.parameters)
        out << "  " << key << " = " << value << "\n";
    std::size_t claim_width = 0;
    for (const auto& row : r.rows) claim_width = std::max(claim_width, row.claim.size());
    for (const auto& row : r.rows) {
        out << "[" << std::setw(7) << to_string(row.status) << "] "
            << std::left << std::setw(static_cast<int>(claim_width))
            << row.claim << std::right << "  " << std::fixed
            << std::setprecision(1) << row.millis << " ms";
        if (!row.witness.empty()) out << "  " << row.witness;
        out << "\n";
    }
    out << r.rows.size() << " checks: " << r.count(Status::kPass) << " pass, "
        << r.count(Status::kFail) << " fail, " << r.count(Status::kRefuted)
        << " refuted, " << r.count(Status::kSkipped) << " skipped\n";
    return out.str();
}

std::string to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["tool_version"] = r.tool_version;
    j["command"] = r.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.parameters) params[key] = value;
    j["parameters"] = params;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json rj;
        rj["claim"] = row.claim;
        rj["anchor"] = row.anchor;
        rj["status"] = to_string(row.status);
        rj["witness"] = row.witness;
        rj["millis"] = row.millis;
        rows.push_back(std::move(rj));
    }
    j["results"] = rows;
    return j.dump(2) + "\n";
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << std::setfill('0') << std::setw(16) << v;
    return out.str();
}

} // namespace cohomcheck
