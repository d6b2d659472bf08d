#include "creogen/errors.hpp"

namespace creogen {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::address_invalid: return "AddressInvalid";
    case Errc::kind_mismatch: return "KindMismatch";
    case Errc::category_mismatch: return "CategoryMismatch";
    case Errc::unification_failure: return "Failure";
    case Errc::unfilled_slot: return "UnfilledSlot";
    case Errc::named_tree_absent: return "NamedTreeAbsent";
    case Errc::unparsable_ending: return "UnparsableEnding";
    case Errc::aspect_on_state: return "AspectOnState";
    case Errc::invalid_tma: return "InvalidTma";
    case Errc::invalid_determination: return "InvalidDetermination";
    case Errc::not_a_predicate: return "NotAPredicate";
    case Errc::dangling_endpoint: return "DanglingEndpoint";
    case Errc::duplicate_id: return "DuplicateId";
    case Errc::disconnected_graph: return "DisconnectedGraph";
    case Errc::no_frame_fits: return "NoFrameFits";
    case Errc::missing_actant: return "MissingActant";
    case Errc::missing_lexeme: return "MissingLexeme";
    case Errc::determiner_clash: return "DeterminerClash";
    case Errc::no_circumstant_tree: return "NoCircumstantTree";
    case Errc::dangling_attachment: return "DanglingAttachment";
  }
  return "UnknownError";
}

std::string Error::to_string() const {
  std::string out = errc_name(code);
  if (!subject.empty()) {
    out += '(';
    out += subject;
    out += ')';
  }
  if (!address.empty()) {
    out += " at ";
    for (std::size_t i = 0; i < address.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(address[i]);
    }
  }
  if (!detail.empty()) {
    out += ": ";
    out += detail;
  }
  return out;
}

}  // namespace creogen
