#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homc/graph.hpp"

namespace homc {

struct MapFlags {
    bool is_hom = false;
    bool is_vertex_injective = false;
    bool is_vertex_surjective = false;
};

// Total map V(domain) -> V(codomain) with verification flags.
class VertexMap {
public:
    VertexMap(std::shared_ptr<const Graph> domain, std::shared_ptr<const Graph> codomain,
              std::vector<int> mapping)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(mapping)) {
        if (int(map_.size()) != domain_->vertex_count())
            throw InputError("mapping is not total on the domain");
        for (int w : map_)
            if (w < 0 || w >= codomain_->vertex_count())
                throw InputError("mapping image out of codomain range");
    }

    const Graph& domain() const { return *domain_; }
    const Graph& codomain() const { return *codomain_; }
    std::shared_ptr<const Graph> domain_ptr() const { return domain_; }
    std::shared_ptr<const Graph> codomain_ptr() const { return codomain_; }

    int image(int v) const { return map_[v]; }
    const std::vector<int>& mapping() const { return map_; }
    const std::string& image_name(int v) const { return codomain_->vertex_name(map_[v]); }

    const MapFlags& flags() const { return flags_; }
    MapFlags& flags() { return flags_; }

private:
    std::shared_ptr<const Graph> domain_, codomain_;
    std::vector<int> map_;
    MapFlags flags_;
};

struct Require {
    bool hom = true;
    bool vertex_injective = false;
    bool vertex_surjective = false;
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
    // Informational; never required downstream.
    bool hom = false;
    bool vertex_injective = false;
    bool vertex_surjective = false;
    bool edge_surjective = false;

    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
};

// Checks the requested properties, reporting every violated constraint with
// the offending edge or vertex pair. On success the map's flags are stamped.
VerifyReport verify_map(VertexMap& f, const Require& req = {});

// Convenience constructor from vertex names.
VertexMap map_from_names(const Graph& domain, const Graph& codomain,
                         const std::vector<std::pair<std::string, std::string>>& pairs);

VertexMap identity_map(const Graph& g);

}  // namespace homc
