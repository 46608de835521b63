#include "expressivity/network_io.hpp"

#include <optional>
#include <sstream>

#include <json.hpp>

#include "expressivity/csv.hpp"
#include "expressivity/error.hpp"

namespace expressivity {

namespace {

void write_array(std::ostringstream& os, const double* values, std::size_t count) {
  os << '[';
  for (std::size_t i = 0; i < count; ++i) {
    if (i) os << ", ";
    os << format_double(values[i]);
  }
  os << ']';
}

std::vector<double> doubles(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw ConfigError(std::string(what) + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Network parse_network(const nlohmann::json& doc);

}  // namespace

std::string network_to_json(const Network& net) {
  std::ostringstream os;
  os << "{\n  \"input_dim\": " << net.input_dim() << ",\n  \"widths\": [";
  for (std::size_t l = 0; l < net.depth(); ++l) os << (l ? ", " : "") << net.layer(l).outputs;
  os << "],\n  \"activation\": ";
  const ActivationSpec& act = net.activation();
  if (act.is_relu()) {
    os << "{\"kind\": \"relu\"}";
  } else {
    os << "{\"kind\": \"generic\", \"breakpoints\": ";
    write_array(os, act.breakpoints().data(), act.breakpoints().size());
    os << ", \"slopes\": ";
    write_array(os, act.slopes().data(), act.slopes().size());
    os << ", \"value_at_first_breakpoint\": " << format_double(act.value_at_first_breakpoint()) << '}';
  }
  os << ",\n  \"weights\": [";
  for (std::size_t l = 0; l < net.depth(); ++l) {
    const Layer& layer = net.layer(l);
    os << (l ? ",\n    [" : "\n    [");
    for (std::size_t j = 0; j < layer.outputs; ++j) {
      if (j) os << ", ";
      write_array(os, layer.weights.data() + j * layer.inputs, layer.inputs);
    }
    os << ']';
  }
  os << "\n  ],\n  \"biases\": [";
  for (std::size_t l = 0; l < net.depth(); ++l) {
    os << (l ? ",\n    " : "\n    ");
    write_array(os, net.layer(l).biases.data(), net.layer(l).outputs);
  }
  os << "\n  ]\n}\n";
  return os.str();
}

Network network_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("network document is not valid JSON: ") + e.what());
  }
  try {
    return parse_network(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed network document: ") + e.what());
  }
}

namespace {

Network parse_network(const nlohmann::json& doc) {
  for (const char* key : {"input_dim", "widths", "activation", "weights", "biases"}) {
    if (!doc.contains(key)) throw ConfigError(std::string("network document is missing '") + key + "'");
  }
  const auto input_dim = doc["input_dim"].get<std::size_t>();
  const auto widths = doc["widths"].get<std::vector<std::size_t>>();

  const auto& act_doc = doc["activation"];
  if (!act_doc.is_object()) throw ConfigError("network 'activation' must be an object");
  const std::string kind = act_doc.value("kind", "");
  std::optional<ActivationSpec> act;
  if (kind == "relu") {
    act = ActivationSpec::relu();
  } else if (kind == "generic") {
    for (const char* key : {"breakpoints", "slopes", "value_at_first_breakpoint"}) {
      if (!act_doc.contains(key)) throw ConfigError(std::string("generic activation is missing '") + key + "'");
    }
    act = ActivationSpec::generic(doubles(act_doc["breakpoints"], "activation breakpoints"),
                                  doubles(act_doc["slopes"], "activation slopes"),
                                  act_doc["value_at_first_breakpoint"].get<double>());
  } else {
    throw ConfigError("unknown activation kind '" + kind + "'");
  }

  const auto& weights = doc["weights"];
  const auto& biases = doc["biases"];
  if (!weights.is_array() || weights.size() != widths.size() || !biases.is_array() ||
      biases.size() != widths.size()) {
    throw ShapeError("network document needs one weight matrix and one bias vector per layer");
  }
  std::vector<Layer> layers;
  std::size_t prev = input_dim;
  for (std::size_t l = 0; l < widths.size(); ++l) {
    Layer layer(prev, widths[l]);
    if (!weights[l].is_array() || weights[l].size() != widths[l]) {
      throw ShapeError("layer " + std::to_string(l + 1) + " weight matrix has the wrong number of rows");
    }
    for (std::size_t j = 0; j < widths[l]; ++j) {
      const auto row = doubles(weights[l][j], "weight row");
      if (row.size() != prev) {
        throw ShapeError("layer " + std::to_string(l + 1) + " weight row has the wrong length");
      }
      std::copy(row.begin(), row.end(), layer.weights.begin() + static_cast<std::ptrdiff_t>(j * prev));
    }
    layer.biases = doubles(biases[l], "bias vector");
    if (layer.biases.size() != widths[l]) {
      throw ShapeError("layer " + std::to_string(l + 1) + " bias vector has the wrong length");
    }
    layers.push_back(std::move(layer));
    prev = widths[l];
  }
  return Network(input_dim, std::move(layers), std::move(*act));
}

}  // namespace

void save_network(const Network& net, const std::filesystem::path& path) {
  write_text_file(path, network_to_json(net));
}

Network load_network(const std::filesystem::path& path) { return network_from_json(read_text_file(path)); }

}  // namespace expressivity
