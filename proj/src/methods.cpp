#include "qmstp/methods.hpp"

#include <algorithm>

#include "qmstp/cuts.hpp"
#include "qmstp/error.hpp"
#include "qmstp/extended.hpp"
#include "qmstp/gl_bounds.hpp"

namespace qmstp {

const std::vector<std::string>& bound_methods() {
  static const std::vector<std::string> tags = {"gl", "ax", "op", "lbb", "vs0", "vs0_boxed", "vs1", "vs2", "rlt1"};
  return tags;
}

bool is_bound_method(std::string_view tag) {
  const auto& t = bound_methods();
  return std::find(t.begin(), t.end(), tag) != t.end();
}

BoundResult compute_bound(const Instance& inst, std::string_view method, const BoundOptions& opt) {
  if (method == "gl") return gl_bound(inst);
  if (method == "ax") return assad_xu(inst, {.epsilon_stop = opt.ax_epsilon, .max_iters = opt.ax_max_iters});
  if (method == "op") return oncan_punnen(inst, {.max_iters = opt.op_max_iters, .seed = opt.seed});
  if (method == "lbb") return lbb_bound(inst);
  if (method == "vs0") return vs0_bound(inst);
  if (method == "vs0_boxed") return vs0_bound(inst, true);
  if (method == "vs1" || method == "vs2") {
    CuttingPlaneOptions cp;
    cp.time_limit = opt.time_limit;
    cp.batch = opt.cut_batch;
    cp.cut_tol = opt.cut_tol;
    return vs_bound(inst, method == "vs1" ? CutLevel::VS1 : CutLevel::VS2, cp);
  }
  if (method == "rlt1") return rlt1_incomplete_bound(inst, {.time_limit = opt.time_limit});
  throw InvalidArgument("unknown bound method '" + std::string(method) + "'");
}

}  // namespace qmstp
