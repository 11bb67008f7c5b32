/*
   Copyright 2026 The formclass Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "formclass/document.hpp"
#include "formclass/report.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kInternalError = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify (1-form, 2-form) pairs and analyze precontact structures with exact arithmetic."};
  app.require_subcommand(1, 1);

  formclass::RunFlags flags;
  std::string input;
  std::string format = "json";
  std::string fields;
  std::size_t n = 0;

  for (const auto& name : formclass::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input,-i", input, "workspace document (JSON)")->required();
    sub->add_option("--point", flags.point, "evaluation point, e.g. x=1,y=-1/2");
    sub->add_option("--form", flags.form, "name of the 1-form (τ or η)");
    sub->add_option("--omega", flags.omega, "name of the 2-form; defaults to d of --form");
    sub->add_option("--function", flags.function, "name of a function (f or H)");
    sub->add_option("--scale", flags.scale, "name of a nowhere-zero rescaling g (hamiltonian)");
    sub->add_option("--fields", fields, "comma-separated vector field names");
    sub->add_option("--n", n, "wedge power for lemma62")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (n > 0) flags.n = n;
  if (!fields.empty()) {
    std::string item;
    for (char c : fields + ",") {
      if (c == ',') {
        if (!item.empty()) flags.fields.push_back(item);
        item.clear();
      } else if (c != ' ') {
        item += c;
      }
    }
  }

  try {
    const formclass::WorkspaceDocument doc = formclass::load(input);
    const nlohmann::json report = formclass::run(command, doc, flags);
    if (format == "text") {
      std::cout << formclass::render_text(report);
    } else {
      std::cout << report.dump(2) << "\n";
    }
  } catch (const formclass::DocumentError& e) {
    std::cerr << "formclass: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const formclass::UsageError& e) {
    std::cerr << "formclass: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "formclass: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "formclass: internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return EXIT_SUCCESS;
}
