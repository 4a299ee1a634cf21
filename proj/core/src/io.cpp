#include "apir/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace apir {

Tensor read_tensor(std::istream& in) {
  std::int64_t rank = -1;
  if (!(in >> rank) || rank < 0) throw IoError("tensor file: bad rank line");
  Dims shape(static_cast<std::size_t>(rank));
  for (auto& d : shape) {
    if (!(in >> d) || d < 1) throw IoError("tensor file: bad dimension extent");
  }
  std::int64_t n = product(shape);
  Tensor t;
  t.shape = std::move(shape);
  t.data.resize(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    if (!(in >> t.data[static_cast<std::size_t>(i)]))
      throw IoError("tensor file: expected " + std::to_string(n) + " elements, got " +
                    std::to_string(i));
  }
  return t;
}

void write_tensor(std::ostream& out, const Tensor& t) {
  out << t.shape.size() << '\n';
  for (std::size_t i = 0; i < t.shape.size(); ++i) {
    if (i) out << ' ';
    out << t.shape[i];
  }
  out << '\n';
  char buf[64];
  for (std::size_t i = 0; i < t.data.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", t.data[i]);
    out << buf << ((i + 1) % 8 == 0 ? '\n' : ' ');
  }
  if (t.data.size() % 8 != 0) out << '\n';
}

Tensor read_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tensor file '" + path + "'");
  return read_tensor(in);
}

void write_tensor_file(const std::string& path, const Tensor& t) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_tensor(out, t);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TensorEnv read_tensor_env(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tensor env file '" + path + "'");
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  TensorEnv env;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw IoError("tensor env line " + std::to_string(lineno) + ": missing '='");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::string name = trim(line.substr(0, eq));
    std::string file = trim(line.substr(eq + 1));
    if (name.empty() || file.empty())
      throw IoError("tensor env line " + std::to_string(lineno) + ": malformed entry");
    std::filesystem::path p(file);
    if (p.is_relative()) p = base / p;
    env[name] = read_tensor_file(p.string());
  }
  return env;
}

}  // namespace apir
