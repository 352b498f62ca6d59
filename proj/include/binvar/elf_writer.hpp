#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binvar/instruction.hpp"

namespace binvar {

/// Writes small static x86-64 ELF executables: one R+X text segment holding
/// the functions, one R+W data segment, and a symbol table.
class ElfBuilder {
 public:
  static constexpr uint64_t kTextBase = 0x401000;
  static constexpr uint64_t kDataBase = 0x800000;

  /// Address the next added function will be placed at.
  uint64_t next_function_address() const;
  void add_function(std::string name, Bytes code);
  void set_data(Bytes data) { data_ = std::move(data); }
  uint64_t data_address() const { return kDataBase; }

  Bytes build() const;

 private:
  struct Func {
    std::string name;
    uint64_t address;
    Bytes code;
  };
  std::vector<Func> funcs_;
  Bytes data_;
};

}  // namespace binvar
