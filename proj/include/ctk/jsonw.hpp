#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ctk {

// Minimal streaming JSON emitter. Reports are written with this instead of a
// general JSON library so every double is serialized as "%.17g": output bytes
// are a pure function of the data, which keeps repeated runs byte-identical.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(double v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(std::size_t v) { return value(static_cast<std::uint64_t>(v)); }
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& null_value();

  template <typename T>
  JsonWriter& kv(std::string_view k, const T& v) {
    key(k);
    return value(v);
  }

  // Finished document plus trailing newline.
  std::string str() const;

 private:
  enum class Frame { object, array };
  void separator();
  void indent();

  std::string out_;
  std::vector<Frame> stack_;
  std::vector<bool> first_;
  bool pending_value_ = false;  // key() emitted, value expected inline
};

}  // namespace ctk
