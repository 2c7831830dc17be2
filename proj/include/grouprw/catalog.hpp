#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "grouprw/group.hpp"

namespace grouprw {

// Group catalog addressed by string ids:
//   "Z^d:d=2", "F:k=2", "lamplighter:d=1,f=2", "heisenberg", "BS:1,2",
//   "grigorchuk", "product:<id>|<id>" (append "|box" for the S_A x S_B set).
// Instances are cached per id; repeated lookups share the intern tables.
std::shared_ptr<const Group> make_group(std::string_view id);

std::shared_ptr<const Group> make_zd(int d);
std::shared_ptr<const Group> make_free(int k);
std::shared_ptr<const Group> make_lamplighter(int d, int f);
std::shared_ptr<const Group> make_heisenberg();
std::shared_ptr<const Group> make_bs(int n);
std::shared_ptr<const Group> make_grigorchuk();

}  // namespace grouprw
