#include "netredist/errors.hpp"

namespace netredist {

const char* to_string(InputErrorCode code) {
    switch (code) {
        case InputErrorCode::syntax: return "syntax";
        case InputErrorCode::missing_field: return "missing-field";
        case InputErrorCode::bad_value: return "bad-value";
        case InputErrorCode::bad_money: return "bad-money";
        case InputErrorCode::negative_valuation: return "negative-valuation";
        case InputErrorCode::duplicate_id: return "duplicate-id";
        case InputErrorCode::unknown_id: return "unknown-id";
        case InputErrorCode::owner_conflict: return "owner-conflict";
        case InputErrorCode::self_edge: return "self-edge";
        case InputErrorCode::duplicate_edge: return "duplicate-edge";
        case InputErrorCode::invite_not_neighbour: return "invite-not-neighbour";
        case InputErrorCode::disconnected: return "disconnected";
        case InputErrorCode::absent_reachable: return "absent-reachable";
    }
    return "unknown";
}

}  // namespace netredist
