// Build-time emitter for the unrolled sorter units. Invoked by CMake once per
// network family; writes files only when their content changes so the
// dependent objects are not rebuilt needlessly.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>

#include "sortkit/networks/emit.hpp"

namespace {

void write_if_changed(const std::filesystem::path& path, const std::string& content) {
    if (std::ifstream in{path}) {
        std::ostringstream old;
        old << in.rdbuf();
        if (old.str() == content) return;
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

int usage() {
    std::cerr << "usage: sortkit-codegen --family <best|bn_l|bn_p|bn_r> --header <file> --source <file>\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    std::string family, header, source;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string_view flag = argv[i];
        if (flag == "--family") family = argv[i + 1];
        else if (flag == "--header") header = argv[i + 1];
        else if (flag == "--source") source = argv[i + 1];
        else return usage();
    }
    const auto parsed = sortkit::networks::parse_family_code_name(family);
    if (!parsed || header.empty() || source.empty()) return usage();

    try {
        const auto unit = sortkit::networks::emit_family_unit(*parsed);
        write_if_changed(header, unit.header);
        write_if_changed(source, unit.source);
    } catch (const std::exception& e) {
        std::cerr << "sortkit-codegen: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
