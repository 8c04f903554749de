#include "alphamod/index_calculus.hpp"

namespace alphamod {

const char* to_string(Branch b) { return b == Branch::LE ? "LE" : "GT"; }

const char* to_string(QCase q) { return q == QCase::QDown ? "QDown" : "QUp"; }

const char* to_string(Region r) {
    switch (r) {
        case Region::S1: return "S1";
        case Region::S2: return "S2";
        case Region::S3: return "S3";
        case Region::S1Tilde: return "~S1";
        case Region::S2Tilde: return "~S2";
        case Region::S3Tilde: return "~S3";
    }
    return "?";
}

}  // namespace alphamod
