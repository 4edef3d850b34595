#include "schreier/sign_seq.hpp"

#include "schreier/error.hpp"

namespace schreier {

SignSeq::SignSeq(std::vector<int> signs) {
  signs_.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) {
      throw Error(ErrorCode::InvalidArgument, "signs must be +1 or -1");
    }
    signs_.push_back(static_cast<std::int8_t>(s));
  }
}

SignSeq SignSeq::parse(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view tok = text.substr(0, comma);
    if (tok == "+" || tok == "1" || tok == "+1") {
      out.push_back(1);
    } else if (tok == "-" || tok == "-1") {
      out.push_back(-1);
    } else {
      throw Error(ErrorCode::ParseError,
                  "malformed sign '" + std::string(tok) + "'",
                  {{"input", std::string(tok)}});
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return SignSeq(std::move(out));
}

int SignSeq::operator()(Index i) const {
  if (!covers(i)) {
    throw Error(ErrorCode::SignsMissing,
                "no sign for index " + std::to_string(i),
                {{"index", i}, {"length", signs_.size()}});
  }
  return signs_[i - 1];
}

std::string to_string(const SignSeq& theta) {
  std::string out;
  for (auto s : theta.raw()) {
    if (!out.empty()) out += ",";
    out += s > 0 ? "+" : "-";
  }
  return out;
}

}  // namespace schreier
