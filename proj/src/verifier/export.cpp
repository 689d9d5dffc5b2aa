#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "godp/emitter.hpp"
#include "godp/verifier.hpp"

namespace godp {

std::vector<std::string> obligation_file_stems(const std::vector<Obligation>& obs) {
  std::map<std::tuple<std::string, std::string, std::string>, std::size_t> counts;
  std::vector<std::string> out;
  for (const Obligation& ob : obs) {
    std::size_t k = counts[{ob.ontology, ob.pattern, ob.parameter}]++;
    out.push_back(ob.ontology + "__" + ob.pattern + "__" + ob.parameter + "__" +
                  std::to_string(k));
  }
  return out;
}

std::vector<std::string> export_obligations(const std::vector<Obligation>& obs,
                                            const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir + ": " + ec.message());

  std::vector<std::string> stems = obligation_file_stems(obs);
  std::vector<std::string> written;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const Obligation& ob = obs[i];
    if (ob.verdict && ob.verdict->proven) continue;
    std::ostringstream text;
    text << emit_manchester(*ob.context);
    text << "\n%% goal: " << to_string(ob.axiom) << "\n";
    text << "%% origin: " << ob.pattern << " parameter " << ob.parameter << " element "
         << ob.element << "\n";
    text << "%% site: " << ob.site << "\n";
    for (const auto& [param, arg] : ob.mapping) text << "%% binding: " << param << " |-> " << arg << "\n";
    std::string status = !ob.verdict                      ? "undischarged"
                         : ob.verdict->step_limit_exceeded ? "step limit exceeded"
                                                           : "unproven";
    text << "%% status: " << status;
    if (ob.verdict && !ob.verdict->diagnostic.empty()) text << " (" << ob.verdict->diagnostic << ")";
    text << "\n";

    std::string path = (fs::path(dir) / (stems[i] + ".omn")).string();
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + path);
    f << text.str();
    written.push_back(path);
  }
  return written;
}

}  // namespace godp
