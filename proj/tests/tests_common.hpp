#pragma once

#include <cstdlib>
#include <memory>
#include <string>

#include "prym/catalog.hpp"

#ifndef PRYM_DEFAULT_DATA_DIR
#define PRYM_DEFAULT_DATA_DIR "data"
#endif

inline std::string test_data_dir() {
    if (const char* env = std::getenv("PRYM_DATA")) return env;
    return PRYM_DEFAULT_DATA_DIR;
}

inline prym::Catalog& test_catalog() {
    static prym::Catalog cat =
        prym::load_catalog(test_data_dir() + "/catalog/smallgroups.cat");
    return cat;
}

inline std::shared_ptr<prym::FiniteGroup> build_and_keep(
    const std::vector<prym::Perm>& gens) {
    return std::make_shared<prym::FiniteGroup>(prym::build_group(gens));
}

inline std::string fixture_path(const std::string& name) {
    return test_data_dir() + "/fixtures/" + name + ".fixture";
}
