#include "triet/morph.hpp"

#include <algorithm>
#include <set>

namespace triet {

bool is_palindrome(const std::string& w) {
    return std::equal(w.begin(), w.begin() + static_cast<long>(w.size() / 2), w.rbegin());
}

Morphism::Morphism(std::vector<char> domain, std::vector<char> target,
                   std::map<char, std::string> images)
    : domain_(std::move(domain)), target_(std::move(target)), images_(std::move(images)) {
    if (domain_.empty()) throw UnknownLetter("empty domain alphabet");
    std::set<char> dom(domain_.begin(), domain_.end());
    std::set<char> tgt(target_.begin(), target_.end());
    if (dom.size() != domain_.size() || tgt.size() != target_.size())
        throw UnknownLetter("alphabet letters must be distinct");
    for (char a : domain_) {
        auto it = images_.find(a);
        if (it == images_.end() || it->second.empty())
            throw UnknownLetter(std::string("missing or empty image for letter ") + a);
        for (char b : it->second)
            if (!tgt.count(b))
                throw UnknownLetter(std::string("image letter outside target alphabet: ") + b);
    }
    if (images_.size() != domain_.size())
        throw UnknownLetter("image map mentions letters outside the domain");
}

Morphism::Morphism(std::vector<char> alphabet, std::map<char, std::string> images)
    : Morphism(alphabet, alphabet, std::move(images)) {}

Morphism Morphism::parse(const std::string& text) {
    std::vector<char> domain;
    std::map<char, std::string> images;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eq = text.find('=', pos);
        if (eq == std::string::npos || eq != pos + 1)
            throw SyntaxError("morphism entry must look like X=WORD near position " + std::to_string(pos));
        char letter = text[pos];
        if (!std::isalnum(static_cast<unsigned char>(letter)) ||
            std::islower(static_cast<unsigned char>(letter)))
            throw SyntaxError(std::string("morphism letters are uppercase alphanumerics, got ") + letter);
        std::size_t comma = text.find(',', eq);
        std::string img = text.substr(eq + 1, comma == std::string::npos ? std::string::npos : comma - eq - 1);
        if (img.empty()) throw SyntaxError(std::string("empty image for letter ") + letter);
        if (images.count(letter)) throw SyntaxError(std::string("duplicate letter ") + letter);
        domain.push_back(letter);
        images[letter] = img;
        pos = comma == std::string::npos ? text.size() : comma + 1;
    }
    if (domain.empty()) throw SyntaxError("empty morphism text");
    std::set<char> letters(domain.begin(), domain.end());
    bool endo = true;
    for (const auto& [a, img] : images)
        for (char b : img) endo = endo && letters.count(b) > 0;
    if (endo) return Morphism(domain, std::move(images));
    std::set<char> tgt;
    for (const auto& [a, img] : images) tgt.insert(img.begin(), img.end());
    return Morphism(domain, std::vector<char>(tgt.begin(), tgt.end()), std::move(images));
}

const std::string& Morphism::image(char letter) const {
    auto it = images_.find(letter);
    if (it == images_.end())
        throw UnknownLetter(std::string("letter outside domain: ") + letter);
    return it->second;
}

bool Morphism::is_endomorphism() const { return domain_ == target_; }

std::size_t Morphism::total_image_length() const {
    std::size_t n = 0;
    for (const auto& [a, img] : images_) n += img.size();
    return n;
}

std::string Morphism::apply(const std::string& w) const {
    std::string out;
    for (char a : w) out += image(a);
    return out;
}

Morphism Morphism::compose_after(const Morphism& inner) const {
    std::map<char, std::string> images;
    for (char a : inner.domain_) images[a] = apply(inner.image(a));
    return Morphism(inner.domain_, target_, std::move(images));
}

Morphism Morphism::squared() const {
    if (!is_endomorphism()) throw NotEndomorphism("cannot square a non-endomorphism");
    return compose_after(*this);
}

std::string Morphism::str() const {
    std::string out;
    for (char a : domain_) {
        if (!out.empty()) out += ',';
        out += a;
        out += '=';
        out += image(a);
    }
    return out;
}

IncidenceMatrix incidence(const Morphism& phi) {
    IncidenceMatrix M;
    M.domain = phi.domain();
    M.target = phi.target();
    M.counts.assign(M.domain.size(), std::vector<long long>(M.target.size(), 0));
    for (std::size_t i = 0; i < M.domain.size(); ++i)
        for (char b : phi.image(M.domain[i])) {
            auto it = std::find(M.target.begin(), M.target.end(), b);
            M.counts[i][static_cast<std::size_t>(it - M.target.begin())]++;
        }
    return M;
}

bool primitive(const Morphism& phi) {
    if (!phi.is_endomorphism())
        throw NotEndomorphism("primitivity is defined for endomorphisms only");
    std::size_t k = phi.domain().size();
    IncidenceMatrix M = incidence(phi);
    // Work with the boolean support; positivity of M^e for the Wielandt
    // exponent e = (k-1)^2 + 1 decides primitivity.
    std::vector<std::vector<bool>> cur(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) cur[i][j] = M.counts[i][j] > 0;
    std::size_t e = (k - 1) * (k - 1) + 1;
    std::vector<std::vector<bool>> acc(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i) acc[i][i] = true;
    // acc = cur^e by binary exponentiation
    auto mul = [k](const auto& X, const auto& Y) {
        std::vector<std::vector<bool>> Z(k, std::vector<bool>(k, false));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l)
                if (X[i][l])
                    for (std::size_t j = 0; j < k; ++j)
                        if (Y[l][j]) Z[i][j] = true;
        return Z;
    };
    while (e) {
        if (e & 1) acc = mul(acc, cur);
        cur = mul(cur, cur);
        e >>= 1;
    }
    for (const auto& row : acc)
        for (bool v : row)
            if (!v) return false;
    return true;
}

std::optional<Morphism> conjugate_step(const Morphism& phi, Side side) {
    if (!phi.is_endomorphism())
        throw NotEndomorphism("conjugation is defined for endomorphisms only");
    const auto& dom = phi.domain();
    char z = side == Side::Left ? phi.image(dom[0]).front() : phi.image(dom[0]).back();
    for (char a : dom) {
        const std::string& img = phi.image(a);
        if ((side == Side::Left ? img.front() : img.back()) != z) return std::nullopt;
    }
    std::map<char, std::string> images;
    for (char a : dom) {
        const std::string& img = phi.image(a);
        if (side == Side::Left)
            images[a] = img.substr(1) + z;
        else
            images[a] = z + img.substr(0, img.size() - 1);
    }
    return Morphism(dom, phi.target(), std::move(images));
}

std::pair<Morphism, ConjugacyCertificate> extreme_conjugate(const Morphism& phi, Side side) {
    Morphism cur = phi;
    std::string stripped;
    std::set<Morphism> seen{cur};
    std::size_t bound = 1 + phi.total_image_length();
    for (;;) {
        std::optional<Morphism> next = conjugate_step(cur, side);
        if (!next) break;
        char z = side == Side::Left ? cur.image(cur.domain()[0]).front()
                                    : cur.image(cur.domain()[0]).back();
        if (side == Side::Left)
            stripped.push_back(z);       // w = z_1 z_2 ... z_m
        else
            stripped.insert(stripped.begin(), z); // w = z_m ... z_1
        cur = *next;
        if (seen.count(cur) || stripped.size() > bound)
            throw PeriodicCycle("conjugation chain cycles; the fixed point is periodic");
        seen.insert(cur);
    }
    return {cur, ConjugacyCertificate{stripped, side}};
}

Morphism mirror(const Morphism& phi) {
    std::map<char, std::string> images;
    for (char a : phi.domain()) {
        const std::string& img = phi.image(a);
        images[a] = std::string(img.rbegin(), img.rend());
    }
    return Morphism(phi.domain(), phi.target(), std::move(images));
}

std::optional<ClassPCertificate> class_p(const Morphism& phi) {
    const auto& dom = phi.domain();
    std::size_t max_p = phi.image(dom[0]).size();
    for (char a : dom) max_p = std::min(max_p, phi.image(a).size());
    // p may also be the full shortest image (with empty remainder part).
    for (std::size_t len = 0; len <= max_p; ++len) {
        std::string p = phi.image(dom[0]).substr(0, len);
        if (!is_palindrome(p)) continue;
        bool ok = true;
        std::map<char, std::string> parts;
        for (char a : dom) {
            const std::string& img = phi.image(a);
            if (img.compare(0, len, p) != 0) { ok = false; break; }
            std::string rest = img.substr(len);
            if (!is_palindrome(rest)) { ok = false; break; }
            parts[a] = rest;
        }
        if (ok) return ClassPCertificate{p, std::move(parts)};
    }
    return std::nullopt;
}

std::vector<Morphism> conjugacy_chain(const Morphism& phi) {
    Morphism leftmost = extreme_conjugate(phi, Side::Left).first;
    std::vector<Morphism> chain{leftmost};
    std::set<Morphism> seen{leftmost};
    std::size_t bound = 1 + phi.total_image_length();
    Morphism cur = leftmost;
    for (;;) {
        std::optional<Morphism> next = conjugate_step(cur, Side::Right);
        if (!next) break;
        cur = *next;
        if (seen.count(cur) || chain.size() > bound)
            throw PeriodicCycle("conjugation chain cycles; the fixed point is periodic");
        chain.push_back(cur);
        seen.insert(cur);
    }
    return chain;
}

std::optional<ConjugacyCertificate> class_p_prime(const Morphism& phi) {
    if (!phi.is_endomorphism())
        throw NotEndomorphism("class P' is defined for endomorphisms only");
    std::vector<Morphism> chain = conjugacy_chain(phi);
    Morphism target = mirror(phi);
    std::size_t at_phi = chain.size(), at_mirror = chain.size();
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i] == phi) at_phi = i;
        if (chain[i] == target) at_mirror = i;
    }
    if (at_phi == chain.size())
        throw Error("InternalError", "morphism missing from its own conjugacy chain");
    if (at_mirror == chain.size()) return std::nullopt;

    // Conjugacy word from the letters stripped between the two chain positions.
    auto stripped_at = [&](std::size_t i) {
        return chain[i].image(chain[i].domain()[0]).back();
    };
    // chain[i+1](a) z = z chain[i](a) with z = last letter of chain[i] images;
    // composing from position j up to position k gives
    // (z_k ... z_{j+1}) chain[j](a) = chain[k](a) (z_k ... z_{j+1}).
    std::string w;
    if (at_phi <= at_mirror) {
        for (std::size_t i = at_phi; i < at_mirror; ++i)
            w.insert(w.begin(), stripped_at(i));
        return ConjugacyCertificate{w, Side::Right}; // w phi(a) = mirror(a) w
    }
    for (std::size_t i = at_mirror; i < at_phi; ++i)
        w.insert(w.begin(), stripped_at(i));
    return ConjugacyCertificate{w, Side::Left};      // w mirror(a) = phi(a) w
}

std::string fixed_point_prefix(const Morphism& phi, char seed, std::size_t n) {
    const std::string& first = phi.image(seed);
    if (first.size() < 2 || first.front() != seed)
        throw NotASubstitutionSeed(std::string("phi(") + seed + ") = " + first +
                                   " does not extend the seed");
    std::string w(1, seed);
    while (w.size() < n) {
        w = phi.apply(w);
        if (w.size() > n) w.resize(n); // prefixes map to prefixes
    }
    return w.substr(0, n);
}

} // namespace triet
