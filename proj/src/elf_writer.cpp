#include "binvar/elf_writer.hpp"

#include <elf.h>

#include <cstring>

namespace binvar {

namespace {

constexpr uint64_t kTextOffset = 0x1000;
constexpr uint64_t kAlign = 16;

uint64_t align_up(uint64_t v, uint64_t a) { return (v + a - 1) / a * a; }

template <typename T>
void put(Bytes& out, uint64_t offset, const T& v) {
  if (out.size() < offset + sizeof(T)) out.resize(offset + sizeof(T));
  std::memcpy(out.data() + offset, &v, sizeof(T));
}

void put_bytes(Bytes& out, uint64_t offset, const Bytes& b) {
  if (out.size() < offset + b.size()) out.resize(offset + b.size());
  std::memcpy(out.data() + offset, b.data(), b.size());
}

}  // namespace

uint64_t ElfBuilder::next_function_address() const {
  if (funcs_.empty()) return kTextBase;
  const Func& f = funcs_.back();
  return align_up(f.address + f.code.size(), kAlign);
}

void ElfBuilder::add_function(std::string name, Bytes code) {
  const uint64_t at = next_function_address();
  funcs_.push_back(Func{std::move(name), at, std::move(code)});
}

Bytes ElfBuilder::build() const {
  // Text image with 0xCC between functions.
  Bytes text;
  for (const Func& f : funcs_) {
    const uint64_t off = f.address - kTextBase;
    text.resize(off, 0xCC);
    text.insert(text.end(), f.code.begin(), f.code.end());
  }
  if (text.empty()) text.push_back(0xC3);

  const uint64_t data_offset = align_up(kTextOffset + text.size(), 0x1000);
  Bytes data = data_.empty() ? Bytes(8, 0) : data_;

  // .strtab and .symtab
  Bytes strtab{0};
  std::vector<Elf64_Sym> syms(1);
  for (const Func& f : funcs_) {
    Elf64_Sym s{};
    s.st_name = static_cast<uint32_t>(strtab.size());
    strtab.insert(strtab.end(), f.name.begin(), f.name.end());
    strtab.push_back(0);
    s.st_info = ELF64_ST_INFO(STB_GLOBAL, STT_FUNC);
    s.st_shndx = 1;
    s.st_value = f.address;
    s.st_size = f.code.size();
    syms.push_back(s);
  }
  Bytes symtab(syms.size() * sizeof(Elf64_Sym));
  std::memcpy(symtab.data(), syms.data(), symtab.size());

  const char shnames[] = "\0.text\0.data\0.symtab\0.strtab\0.shstrtab\0";
  Bytes shstrtab(shnames, shnames + sizeof(shnames) - 1);
  // Offsets into shstrtab: .text=1 .data=7 .symtab=13 .strtab=21 .shstrtab=29

  const uint64_t symtab_off = align_up(data_offset + data.size(), 8);
  const uint64_t strtab_off = symtab_off + symtab.size();
  const uint64_t shstr_off = strtab_off + strtab.size();
  const uint64_t shdr_off = align_up(shstr_off + shstrtab.size(), 8);

  Bytes out;
  Elf64_Ehdr eh{};
  std::memcpy(eh.e_ident, ELFMAG, SELFMAG);
  eh.e_ident[EI_CLASS] = ELFCLASS64;
  eh.e_ident[EI_DATA] = ELFDATA2LSB;
  eh.e_ident[EI_VERSION] = EV_CURRENT;
  eh.e_ident[EI_OSABI] = ELFOSABI_SYSV;
  eh.e_type = ET_EXEC;
  eh.e_machine = EM_X86_64;
  eh.e_version = EV_CURRENT;
  eh.e_entry = funcs_.empty() ? kTextBase : funcs_.front().address;
  eh.e_phoff = sizeof(Elf64_Ehdr);
  eh.e_shoff = shdr_off;
  eh.e_ehsize = sizeof(Elf64_Ehdr);
  eh.e_phentsize = sizeof(Elf64_Phdr);
  eh.e_phnum = 2;
  eh.e_shentsize = sizeof(Elf64_Shdr);
  eh.e_shnum = 6;
  eh.e_shstrndx = 5;
  put(out, 0, eh);

  Elf64_Phdr ph_text{};
  ph_text.p_type = PT_LOAD;
  ph_text.p_flags = PF_R | PF_X;
  ph_text.p_offset = kTextOffset;
  ph_text.p_vaddr = ph_text.p_paddr = kTextBase;
  ph_text.p_filesz = ph_text.p_memsz = text.size();
  ph_text.p_align = 0x1000;
  put(out, sizeof(Elf64_Ehdr), ph_text);

  Elf64_Phdr ph_data{};
  ph_data.p_type = PT_LOAD;
  ph_data.p_flags = PF_R | PF_W;
  ph_data.p_offset = data_offset;
  ph_data.p_vaddr = ph_data.p_paddr = kDataBase;
  ph_data.p_filesz = ph_data.p_memsz = data.size();
  ph_data.p_align = 0x1000;
  put(out, sizeof(Elf64_Ehdr) + sizeof(Elf64_Phdr), ph_data);

  put_bytes(out, kTextOffset, text);
  put_bytes(out, data_offset, data);
  put_bytes(out, symtab_off, symtab);
  put_bytes(out, strtab_off, strtab);
  put_bytes(out, shstr_off, shstrtab);

  Elf64_Shdr sh[6]{};
  sh[1] = {1, SHT_PROGBITS, SHF_ALLOC | SHF_EXECINSTR, kTextBase, kTextOffset, text.size(), 0, 0, 16, 0};
  sh[2] = {7, SHT_PROGBITS, SHF_ALLOC | SHF_WRITE, kDataBase, data_offset, data.size(), 0, 0, 8, 0};
  sh[3] = {13, SHT_SYMTAB, 0, 0, symtab_off, symtab.size(), 4, 1, 8, sizeof(Elf64_Sym)};
  sh[4] = {21, SHT_STRTAB, 0, 0, strtab_off, strtab.size(), 0, 0, 1, 0};
  sh[5] = {29, SHT_STRTAB, 0, 0, shstr_off, shstrtab.size(), 0, 0, 1, 0};
  for (int i = 0; i < 6; ++i) put(out, shdr_off + i * sizeof(Elf64_Shdr), sh[i]);
  return out;
}

}  // namespace binvar
