#include "triet/json_io.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <sstream>

namespace triet {

std::string decimal_string(const QuadraticNumber& x, unsigned digits) {
    using F = boost::multiprecision::cpp_bin_float_100;
    F a = F(numerator(x.rational_part()).str()) / F(denominator(x.rational_part()).str());
    F b = F(numerator(x.radical_part()).str()) / F(denominator(x.radical_part()).str());
    F v = a + b * sqrt(F(x.d()));
    std::ostringstream os;
    os << std::setprecision(static_cast<int>(digits)) << v;
    return os.str();
}

Json number_json(const QuadraticNumber& x) {
    return Json{{"exact", x.str()}, {"decimal", decimal_string(x)}};
}

Json interval_json(const Interval& I) {
    return Json{{"gamma", number_json(I.lo)}, {"delta", number_json(I.hi)}};
}

Json keane_json(const KeanePoints& K) {
    return Json{
        {"aHat", number_json(K.a_hat)}, {"bHat", number_json(K.b_hat)},
        {"cHat", number_json(K.c_hat)}, {"dHat", number_json(K.d_hat)},
        {"kAlpha", K.k_alpha}, {"kBeta", K.k_beta},
        {"kGamma", K.k_gamma}, {"kDelta", K.k_delta},
    };
}

Json induction_json(const InductionResult& res) {
    Json pieces = Json::array();
    for (const Piece& p : res.pieces)
        pieces.push_back(Json{{"gamma", number_json(p.sub.lo)},
                              {"delta", number_json(p.sub.hi)},
                              {"word", p.word},
                              {"length", p.length()}});
    Json j{
        {"pieces", pieces},
        {"caseTag", to_string(res.case_tag)},
        {"r1", res.r1},
        {"r2", res.r2},
        {"pattern", res.pattern == Pattern::P1 ? "P1" : "P2"},
        {"keane", keane_json(res.keane)},
        {"returnWords", Json{{"R1", res.ret1}, {"R2", res.ret2}}},
    };
    if (res.homothety) {
        j["homothety"] = Json{{"lambda", number_json(res.homothety->lambda)},
                              {"mu", number_json(res.homothety->mu)},
                              {"center", number_json(res.homothety->center)}};
    } else {
        j["homothety"] = nullptr;
    }
    return j;
}

Json induced_map_json(const InducedMap& m) {
    Json branches = Json::array();
    for (const auto& b : m.branches)
        branches.push_back(Json{{"interval", interval_json(b.sub)},
                                {"shift", number_json(b.shift)},
                                {"returnTime", b.return_time}});
    return Json{{"branches", branches}, {"permutation", m.permutation}};
}

Json return_times_json(const ReturnTimeSet& rts) {
    return Json{{"times", rts.times},
                {"r1", rts.r1},
                {"r2", rts.r2},
                {"pattern", rts.pattern == Pattern::P1 ? "P1" : "P2"}};
}

Json gap_report_json(const GapReport& rep) {
    Json values = Json::array();
    for (const QuadraticNumber& v : rep.values) values.push_back(number_json(v));
    Json j{{"values", values}};
    if (rep.basis)
        j["basis"] = Json{{"v1", number_json(rep.basis->first)},
                          {"v2", number_json(rep.basis->second)}};
    else
        j["basis"] = nullptr;
    return j;
}

Json bispecial_json(const Bispecial& b) {
    return Json{{"word", b.word},
                {"palindromic", b.palindromic},
                {"case", to_string(b.shape)}};
}

Json morphism_json(const Morphism& m) {
    Json images;
    for (char a : m.domain()) images[std::string(1, a)] = m.image(a);
    return Json{{"map", m.str()}, {"images", images}};
}

Json recovered_json(const RecoveredParameters& p) {
    return Json{
        {"alpha", number_json(p.alpha)},
        {"beta", number_json(p.beta)},
        {"rho", number_json(p.rho)},
        {"lambda", number_json(p.lambda)},
        {"etaChoice", p.eta_choice == EtaChoice::Xi ? "xi" : "xiSquared"},
        {"conjugacyWordLength", p.conjugacy_word_length},
        {"conjugacyWord", p.conjugacy_word},
        {"interval", interval_json(p.interval)},
        {"eta", p.eta.str()},
        {"etaLeft", p.eta_left.str()},
    };
}

Json invariance_json(const InvarianceReport& rep) {
    return Json{{"checks", Json{{"prefixFixed", rep.prefix_fixed},
                                {"itinerariesMatch", rep.itineraries_match}}},
                {"ok", rep.ok()}};
}

Json hks_json(const HksReport& rep) {
    return Json{{"xiInPPrime", rep.xi_in_p_prime},
                {"xi2InPPrime", rep.xi2_in_p_prime},
                {"recoverSucceeded", rep.recover_succeeded},
                {"theoremWitness", rep.theorem_witness}};
}

} // namespace triet
