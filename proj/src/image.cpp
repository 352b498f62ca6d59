#include "binvar/image.hpp"

#include <elf.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <map>
#include <set>

#include "binvar/error.hpp"

namespace binvar {

namespace {

template <typename T>
T read_struct(std::span<const uint8_t> bytes, uint64_t offset) {
  if (offset > bytes.size() || bytes.size() - offset < sizeof(T))
    throw Error(ErrorKind::MalformedElf, "structure extends past end of file");
  T v;
  std::memcpy(&v, bytes.data() + offset, sizeof(T));
  return v;
}

std::string read_cstr(std::span<const uint8_t> bytes, uint64_t offset, uint64_t limit) {
  std::string s;
  for (uint64_t i = offset; i < limit && i < bytes.size() && bytes[i]; ++i) s += static_cast<char>(bytes[i]);
  return s;
}

bool is_single_nop(const Instruction& in) { return in.bytes.size() == 1 && in.bytes[0] == 0x90; }

bool is_endbr64(const Instruction& in) {
  return in.bytes.size() == 4 && in.bytes[0] == 0xF3 && in.bytes[1] == 0x0F && in.bytes[2] == 0x1E &&
         in.bytes[3] == 0xFA;
}

}  // namespace

bool Section::executable() const { return (flags & SHF_EXECINSTR) != 0; }

std::string_view to_string(Terminator t) {
  switch (t) {
    case Terminator::Fallthrough: return "fallthrough";
    case Terminator::Jump: return "jump";
    case Terminator::CondJump: return "cond_jump";
    case Terminator::Call: return "call";
    case Terminator::Return: return "return";
    case Terminator::Indirect: return "indirect";
  }
  return "?";
}

size_t FunctionView::instruction_count() const {
  size_t n = 0;
  for (const auto& b : blocks) n += b.instructions.size();
  return n;
}

std::vector<const Instruction*> FunctionView::instructions() const {
  std::vector<const Instruction*> out;
  out.reserve(instruction_count());
  for (const auto& b : blocks)
    for (const auto& in : b.instructions) out.push_back(&in);
  return out;
}

std::optional<size_t> FunctionView::block_at(uint64_t addr) const {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (addr >= blocks[i].start && addr < blocks[i].end()) return i;
  return std::nullopt;
}

std::optional<uint64_t> BinaryImage::file_offset(uint64_t vaddr, uint64_t len) const {
  for (const Segment& s : segments) {
    if (s.type != PT_LOAD) continue;
    if (vaddr >= s.vaddr && vaddr - s.vaddr <= s.filesz && s.filesz - (vaddr - s.vaddr) >= len)
      return s.offset + (vaddr - s.vaddr);
  }
  return std::nullopt;
}

std::span<const uint8_t> BinaryImage::bytes_at(uint64_t vaddr, uint64_t len) const {
  auto off = file_offset(vaddr, len);
  if (!off) throw Error(ErrorKind::OutOfFunctionRange, "address not backed by a loadable segment");
  return std::span<const uint8_t>(raw).subspan(*off, len);
}

FunctionView* BinaryImage::find_function(std::string_view name) {
  for (auto& f : functions)
    if (f.name == name) return &f;
  return nullptr;
}

const FunctionView* BinaryImage::find_function(std::string_view name) const {
  for (const auto& f : functions)
    if (f.name == name) return &f;
  return nullptr;
}

const FunctionView& BinaryImage::function(std::string_view name) const {
  if (auto* f = find_function(name)) return *f;
  throw Error(ErrorKind::UnknownFunction, std::string(name));
}

const FunctionView* BinaryImage::function_containing(uint64_t vaddr) const {
  for (const auto& f : functions)
    if (vaddr >= f.start && vaddr < f.end()) return &f;
  return nullptr;
}

bool BinaryImage::is_function_start(uint64_t vaddr) const {
  for (const auto& f : functions)
    if (f.start == vaddr) return true;
  return false;
}

void BinaryImage::redisassemble(FunctionView& fn) const {
  FunctionView fresh = disassemble_function(fn.name, fn.start, bytes_at(fn.start, fn.length));
  fn = std::move(fresh);
}

void build_blocks(FunctionView& fn, std::vector<Instruction> insns) {
  fn.blocks.clear();
  if (insns.empty()) return;
  const uint64_t lo = fn.start, hi = fn.end();

  std::set<uint64_t> boundaries;
  for (const auto& in : insns) boundaries.insert(in.address);

  std::set<uint64_t> leaders{insns.front().address};
  for (const auto& in : insns) {
    if ((in.flow == Flow::Jump || in.flow == Flow::CondJump) && in.branch_target) {
      const uint64_t t = *in.branch_target;
      if (t >= lo && t < hi) {
        if (!boundaries.count(t)) {
          if (!fn.opaque) {
            fn.opaque = true;
            fn.opaque_reason = "misaligned_target";
          }
        } else {
          leaders.insert(t);
        }
      }
    }
    if (in.flow == Flow::IndirectJump && !fn.opaque) {
      fn.opaque = true;
      fn.opaque_reason = "indirect_jump";
    }
    if (in.flow != Flow::None && in.flow != Flow::Call && in.flow != Flow::IndirectCall && in.end() < hi)
      leaders.insert(in.end());
  }

  std::map<uint64_t, size_t> index;
  for (const auto& in : insns) {
    if (leaders.count(in.address)) {
      index[in.address] = fn.blocks.size();
      fn.blocks.push_back(BasicBlock{in.address, {}, {}, Terminator::Fallthrough, std::nullopt, false});
    }
    fn.blocks.back().instructions.push_back(in);
  }

  for (size_t i = 0; i < fn.blocks.size(); ++i) {
    BasicBlock& b = fn.blocks[i];
    const Instruction& last = b.instructions.back();
    const std::optional<size_t> next = i + 1 < fn.blocks.size() ? std::optional<size_t>(i + 1) : std::nullopt;
    auto target_block = [&](const Instruction& in) -> std::optional<size_t> {
      if (!in.branch_target) return std::nullopt;
      auto it = index.find(*in.branch_target);
      if (it == index.end()) return std::nullopt;
      return it->second;
    };
    switch (last.flow) {
      case Flow::Jump:
        b.terminator_kind = Terminator::Jump;
        if (auto t = target_block(last))
          b.successors.push_back(*t);
        else
          b.exits = true;
        break;
      case Flow::CondJump:
        b.terminator_kind = Terminator::CondJump;
        if (auto t = target_block(last))
          b.successors.push_back(*t);
        else
          b.exits = true;
        if (next) {
          b.fallthrough = next;
          if (b.successors.empty() || b.successors.front() != *next) b.successors.push_back(*next);
        }
        break;
      case Flow::Return:
      case Flow::Trap:
        b.terminator_kind = Terminator::Return;
        break;
      case Flow::IndirectJump:
        b.terminator_kind = Terminator::Indirect;
        break;
      case Flow::Call:
      case Flow::IndirectCall:
        b.terminator_kind = next ? Terminator::Call : Terminator::Fallthrough;
        if (next) {
          b.fallthrough = next;
          b.successors.push_back(*next);
        }
        break;
      case Flow::None:
        b.terminator_kind = Terminator::Fallthrough;
        if (next) {
          b.fallthrough = next;
          b.successors.push_back(*next);
        }
        break;
    }
  }
}

FunctionView disassemble_function(std::string name, uint64_t start, std::span<const uint8_t> code) {
  FunctionView fn;
  fn.name = std::move(name);
  fn.start = start;
  fn.length = code.size();
  size_t gap = 0;
  std::vector<Instruction> insns = decode_all(code, start, &gap);
  if (gap != code.size()) {
    fn.opaque = true;
    fn.opaque_reason = "disassembly_gap";
  }
  build_blocks(fn, std::move(insns));
  if (fn.blocks.empty() && !fn.opaque) {
    fn.opaque = true;
    fn.opaque_reason = "empty";
  }
  fn.padding_region = detect_padding(fn, kPaddingMinLength);
  return fn;
}

uint64_t entry_insertion_offset(const FunctionView& fn) {
  if (fn.blocks.empty() || fn.blocks.front().instructions.empty()) return 0;
  return is_endbr64(fn.blocks.front().instructions.front()) ? 4 : 0;
}

std::optional<PaddingRegion> detect_padding(const FunctionView& fn, uint64_t min_len) {
  const auto insns = fn.instructions();
  if (insns.empty()) return std::nullopt;

  auto run_from = [&](size_t i) {
    uint64_t len = 0;
    while (i < insns.size() && is_single_nop(*insns[i])) {
      ++len;
      ++i;
    }
    return len;
  };
  auto index_of = [&](uint64_t addr) -> std::optional<size_t> {
    for (size_t i = 0; i < insns.size(); ++i)
      if (insns[i]->address == addr) return i;
    return std::nullopt;
  };

  std::optional<PaddingRegion> best;
  auto consider = [&](uint64_t offset, uint64_t len) {
    if (len >= min_len && len > 0 && (!best || len > best->length)) best = PaddingRegion{offset, len};
  };

  size_t first = 0;
  if (is_endbr64(*insns[0])) first = 1;
  if (first < insns.size()) {
    consider(insns[first]->address - fn.start, run_from(first));
    const Instruction& head = *insns[first];
    if (head.flow == Flow::Jump && head.branch_target && *head.branch_target > head.address &&
        *head.branch_target <= fn.end()) {
      consider(head.end() - fn.start, run_from(first + 1));
      // NOPs that close the skipped region, ending at the jump target.
      auto target = index_of(*head.branch_target);
      const size_t stop = target ? *target : insns.size();
      size_t j = stop;
      while (j > first + 1 && is_single_nop(*insns[j - 1])) --j;
      if (j < stop) consider(insns[j]->address - fn.start, stop - j);
    }
  }
  return best;
}

BinaryImage parse_elf(std::span<const uint8_t> bytes, std::string path) {
  if (bytes.size() < EI_NIDENT || std::memcmp(bytes.data(), ELFMAG, SELFMAG) != 0)
    throw Error(ErrorKind::MalformedElf, "bad ELF magic");
  if (bytes[EI_CLASS] != ELFCLASS64) throw Error(ErrorKind::UnsupportedArch, "only ELFCLASS64 is supported");
  if (bytes[EI_DATA] != ELFDATA2LSB) throw Error(ErrorKind::UnsupportedArch, "only little-endian ELF is supported");
  const auto eh = read_struct<Elf64_Ehdr>(bytes, 0);
  if (eh.e_machine != EM_X86_64) throw Error(ErrorKind::UnsupportedArch, "machine is not x86-64");

  BinaryImage img;
  img.path = std::move(path);
  img.raw.assign(bytes.begin(), bytes.end());

  if (eh.e_phoff && eh.e_phnum) {
    if (eh.e_phentsize != sizeof(Elf64_Phdr)) throw Error(ErrorKind::MalformedElf, "unexpected phentsize");
    for (unsigned i = 0; i < eh.e_phnum; ++i) {
      const auto ph = read_struct<Elf64_Phdr>(bytes, eh.e_phoff + uint64_t{i} * sizeof(Elf64_Phdr));
      img.segments.push_back(Segment{ph.p_type, ph.p_flags, ph.p_offset, ph.p_vaddr, ph.p_filesz, ph.p_memsz});
    }
  }

  if (eh.e_shoff && eh.e_shnum) {
    if (eh.e_shentsize != sizeof(Elf64_Shdr)) throw Error(ErrorKind::MalformedElf, "unexpected shentsize");
    std::vector<Elf64_Shdr> shdrs;
    for (unsigned i = 0; i < eh.e_shnum; ++i)
      shdrs.push_back(read_struct<Elf64_Shdr>(bytes, eh.e_shoff + uint64_t{i} * sizeof(Elf64_Shdr)));
    const Elf64_Shdr* shstr = eh.e_shstrndx < shdrs.size() ? &shdrs[eh.e_shstrndx] : nullptr;
    for (const auto& sh : shdrs) {
      Section s;
      if (shstr) s.name = read_cstr(bytes, shstr->sh_offset + sh.sh_name, shstr->sh_offset + shstr->sh_size);
      s.type = sh.sh_type;
      s.flags = sh.sh_flags;
      s.addr = sh.sh_addr;
      s.offset = sh.sh_offset;
      s.size = sh.sh_size;
      img.sections.push_back(std::move(s));
    }

    // Prefer the full symbol table; fall back to the dynamic one.
    auto load_symbols = [&](uint32_t type) {
      for (const auto& sh : shdrs) {
        if (sh.sh_type != type || sh.sh_entsize != sizeof(Elf64_Sym) || sh.sh_link >= shdrs.size()) continue;
        const Elf64_Shdr& strtab = shdrs[sh.sh_link];
        const uint64_t count = sh.sh_size / sizeof(Elf64_Sym);
        for (uint64_t i = 0; i < count; ++i) {
          const auto sym = read_struct<Elf64_Sym>(bytes, sh.sh_offset + i * sizeof(Elf64_Sym));
          Symbol s;
          s.name = read_cstr(bytes, strtab.sh_offset + sym.st_name, strtab.sh_offset + strtab.sh_size);
          s.value = sym.st_value;
          s.size = sym.st_size;
          s.type = ELF64_ST_TYPE(sym.st_info);
          s.bind = ELF64_ST_BIND(sym.st_info);
          s.shndx = sym.st_shndx;
          img.symbols.push_back(std::move(s));
        }
      }
    };
    load_symbols(SHT_SYMTAB);
    if (img.symbols.empty()) load_symbols(SHT_DYNSYM);
  }

  std::set<uint64_t> seen;
  for (const Symbol& s : img.symbols) {
    if (s.type != STT_FUNC || s.size == 0 || s.shndx == SHN_UNDEF || s.shndx >= img.sections.size()) continue;
    const Section& sec = img.sections[s.shndx];
    if (!sec.executable() || s.value < sec.addr || s.value + s.size > sec.addr + sec.size) continue;
    if (!img.file_offset(s.value, s.size) || !seen.insert(s.value).second) continue;
    img.functions.push_back(disassemble_function(s.name, s.value, img.bytes_at(s.value, s.size)));
  }
  std::sort(img.functions.begin(), img.functions.end(),
            [](const FunctionView& a, const FunctionView& b) { return a.start < b.start; });
  return img;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::span<const uint8_t> bytes) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

BinaryImage load_elf(const std::filesystem::path& path) { return parse_elf(read_file(path), path.string()); }

Bytes serialize(const BinaryImage& image) { return image.raw; }

void save_elf(const BinaryImage& image, const std::filesystem::path& path) { write_file(path, serialize(image)); }

void patch_bytes(BinaryImage& image, uint64_t vaddr, std::span<const uint8_t> new_bytes,
                 std::optional<uint64_t> replaced_len) {
  if (replaced_len && *replaced_len != new_bytes.size())
    throw Error(ErrorKind::LengthMismatch, "replacement must keep the original length");
  FunctionView* fn = nullptr;
  for (auto& f : image.functions)
    if (vaddr >= f.start && vaddr + new_bytes.size() <= f.end()) fn = &f;
  if (!fn || new_bytes.empty()) throw Error(ErrorKind::OutOfFunctionRange, "patch must lie inside one function");
  const auto off = image.file_offset(vaddr, new_bytes.size());
  if (!off) throw Error(ErrorKind::OutOfFunctionRange, "patch not backed by file bytes");
  std::copy(new_bytes.begin(), new_bytes.end(), image.raw.begin() + static_cast<std::ptrdiff_t>(*off));
  image.redisassemble(*fn);
}

void replace_instruction(BinaryImage& image, uint64_t vaddr, std::span<const uint8_t> new_bytes) {
  const FunctionView* fn = image.function_containing(vaddr);
  if (!fn) throw Error(ErrorKind::OutOfFunctionRange, "no function at address");
  for (const Instruction* in : fn->instructions()) {
    if (in->address == vaddr) {
      patch_bytes(image, vaddr, new_bytes, in->size());
      return;
    }
  }
  throw Error(ErrorKind::OutOfFunctionRange, "address is not an instruction boundary");
}

}  // namespace binvar
