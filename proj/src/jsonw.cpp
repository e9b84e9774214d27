#include "ctk/jsonw.hpp"

#include <cassert>
#include <cstdio>

#include "ctk/util.hpp"

namespace ctk {

void JsonWriter::indent() {
  out_.push_back('\n');
  out_.append(2 * stack_.size(), ' ');
}

void JsonWriter::separator() {
  if (pending_value_) {
    // value directly after "key": — nothing to emit
    pending_value_ = false;
    return;
  }
  if (stack_.empty()) return;
  if (!first_.back()) out_.push_back(',');
  first_.back() = false;
  indent();
}

JsonWriter& JsonWriter::begin_object() {
  separator();
  out_.push_back('{');
  stack_.push_back(Frame::object);
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  assert(!stack_.empty() && stack_.back() == Frame::object);
  bool empty = first_.back();
  stack_.pop_back();
  first_.pop_back();
  if (!empty) indent();
  out_.push_back('}');
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separator();
  out_.push_back('[');
  stack_.push_back(Frame::array);
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  assert(!stack_.empty() && stack_.back() == Frame::array);
  bool empty = first_.back();
  stack_.pop_back();
  first_.pop_back();
  if (!empty) indent();
  out_.push_back(']');
  return *this;
}

static void append_escaped(std::string& out, std::string_view s) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

JsonWriter& JsonWriter::key(std::string_view k) {
  assert(!stack_.empty() && stack_.back() == Frame::object);
  separator();
  append_escaped(out_, k);
  out_ += ": ";
  pending_value_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  separator();
  out_ += format_double(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  separator();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
  separator();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
  separator();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
  separator();
  append_escaped(out_, v);
  return *this;
}

JsonWriter& JsonWriter::null_value() {
  separator();
  out_ += "null";
  return *this;
}

std::string JsonWriter::str() const {
  assert(stack_.empty());
  return out_ + "\n";
}

}  // namespace ctk
