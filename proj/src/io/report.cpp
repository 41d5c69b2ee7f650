#include "strathom/io/report.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

namespace strathom::io {

namespace {

using Json = nlohmann::ordered_json;

bool scalar_list(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (x.is_structured()) return false;
  }
  return true;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

std::string list_text(const Json& j) {
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar_text(j[i]);
  return out + "]";
}

void emit(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(2 * indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() && !value.empty()) {
        os << pad << key << ":\n";
        emit(value, indent + 1, os);
      } else if (value.is_array() && !scalar_list(value)) {
        os << pad << key << ":\n";
        emit(value, indent + 1, os);
      } else if (value.is_array()) {
        os << pad << key << ": " << list_text(value) << "\n";
      } else {
        os << pad << key << ": " << (value.is_object() ? "{}" : scalar_text(value)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_object()) {
        os << pad << "-\n";
        emit(x, indent + 1, os);
      } else if (scalar_list(x)) {
        os << pad << "- " << list_text(x) << "\n";
      } else if (x.is_array()) {
        os << pad << "-\n";
        emit(x, indent + 1, os);
      } else {
        os << pad << "- " << scalar_text(x) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["provenance"] = provenance;
  if (error.empty()) {
    j["result"] = result;
  } else {
    j["error"] = error;
  }
  j["exit_code"] = exit_code;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: ";
  for (std::size_t i = 0; i < command.size(); ++i) os << (i ? " " : "") << command[i];
  os << "\n";
  if (!provenance.empty()) {
    os << "provenance:\n";
    emit(provenance, 1, os);
  }
  if (!error.empty()) {
    os << "error: " << error << "\n";
  } else {
    emit(result, 0, os);
  }
  return os.str();
}

std::string Report::render() const {
  if (!verbatim.empty()) return verbatim;
  return json ? to_json().dump(2) + "\n" : to_text();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

}  // namespace strathom::io
