#pragma once

#include <optional>
#include <string>
#include <utility>

#include "k3disc/ints.hpp"

namespace k3disc {

enum class Tag { yes, no, unknown };

inline const char* tag_name(Tag t) {
    switch (t) {
        case Tag::yes: return "YES";
        case Tag::no: return "NO";
        default: return "UNKNOWN";
    }
}

// A finite, recheckable reason for a NO answer.  kind "mod" carries a
// modulus/residue pair (the target residue is missing from the form's value
// set); other kinds are structural and replayable from context.
struct Obstruction {
    std::string kind;
    Int modulus = 0;
    Int residue = 0;
    std::string note;

    bool operator==(const Obstruction&) const = default;
};

// Three-valued certified answer.  YES carries a witness that revalidates by
// exact recomputation; NO carries an obstruction; UNKNOWN records the
// exhausted search bound.
struct Verdict3 {
    Tag tag = Tag::unknown;
    std::optional<IntVec> witness;
    std::optional<std::pair<IntVec, IntVec>> witness_pair;
    std::optional<Obstruction> obstruction;
    std::optional<Int> bound;

    static Verdict3 yes(IntVec w) {
        Verdict3 v;
        v.tag = Tag::yes;
        v.witness = std::move(w);
        return v;
    }
    static Verdict3 yes_pair(IntVec u, IntVec w) {
        Verdict3 v;
        v.tag = Tag::yes;
        v.witness_pair = std::make_pair(std::move(u), std::move(w));
        return v;
    }
    static Verdict3 no(Obstruction o) {
        Verdict3 v;
        v.tag = Tag::no;
        v.obstruction = std::move(o);
        return v;
    }
    static Verdict3 unknown(Int b) {
        Verdict3 v;
        v.tag = Tag::unknown;
        v.bound = std::move(b);
        return v;
    }
};

}  // namespace k3disc
