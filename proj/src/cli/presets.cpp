#include "tprop/cli/presets.hpp"

namespace tprop::cli {

// Reference magnitudes shared by the trajectory presets: electron,
// v0 = 1e5 m/s, B = 1 mT, E = 10 V/m (so the E x B drift is 0.1 v0).
// The cyclotron frequency at 1 mT is 1.75882e8 rad/s.

const std::vector<Preset>& presets() {
    static const std::vector<Preset> table = {
        {"fig-traj-upper-left",
         "electron gyration, B tilted in the y-z plane, no electric field",
         "scenario = \"lorentz-static\"\n"
         "[particle]\n"
         "mass = 9.1093837015e-31\n"
         "charge = -1.602176634e-19\n"
         "[fields]\n"
         "B = [0.0, 7.0710678118654755e-4, 7.0710678118654755e-4]\n"
         "[initial]\n"
         "v0 = [1.0e5, 0.0, 0.0]\n"
         "[output]\n"
         "file = \"fig-traj-upper-left.csv\"\n"},

        {"fig-traj-upper-middle",
         "electron helix, B along z, E antiparallel to z",
         "scenario = \"lorentz-static\"\n"
         "[particle]\n"
         "mass = 9.1093837015e-31\n"
         "charge = -1.602176634e-19\n"
         "[fields]\n"
         "B = [0.0, 0.0, 1.0e-3]\n"
         "E = [0.0, 0.0, -10.0]\n"
         "[initial]\n"
         "v0 = [7.0710678118654755e4, 0.0, 7.0710678118654755e4]\n"
         "[output]\n"
         "file = \"fig-traj-upper-middle.csv\"\n"},

        {"fig-traj-upper-right",
         "same fields as upper-middle, longer run",
         "scenario = \"lorentz-static\"\n"
         "[particle]\n"
         "mass = 9.1093837015e-31\n"
         "charge = -1.602176634e-19\n"
         "[fields]\n"
         "B = [0.0, 0.0, 1.0e-3]\n"
         "E = [0.0, 0.0, -10.0]\n"
         "[initial]\n"
         "v0 = [7.0710678118654755e4, 0.0, 7.0710678118654755e4]\n"
         "[numerics]\n"
         "periods = 12.0\n"
         "[output]\n"
         "file = \"fig-traj-upper-right.csv\"\n"},

        {"fig-traj-lower-left",
         "electron, B along z, E tilted in the y-z plane: drifting helix",
         "scenario = \"lorentz-static\"\n"
         "[particle]\n"
         "mass = 9.1093837015e-31\n"
         "charge = -1.602176634e-19\n"
         "[fields]\n"
         "B = [0.0, 0.0, 1.0e-3]\n"
         "E = [0.0, 7.0710678118654755, 7.0710678118654755]\n"
         "[initial]\n"
         "v0 = [7.0710678118654755e4, 0.0, 7.0710678118654755e4]\n"
         "[output]\n"
         "file = \"fig-traj-lower-left.csv\"\n"},

        {"fig-traj-lower-right",
         "electron, B along z, E along y: pure transverse drift",
         "scenario = \"lorentz-static\"\n"
         "[particle]\n"
         "mass = 9.1093837015e-31\n"
         "charge = -1.602176634e-19\n"
         "[fields]\n"
         "B = [0.0, 0.0, 1.0e-3]\n"
         "E = [0.0, 10.0, 0.0]\n"
         "[initial]\n"
         "v0 = [7.0710678118654755e4, 0.0, 7.0710678118654755e4]\n"
         "[output]\n"
         "file = \"fig-traj-lower-right.csv\"\n"},

        {"fig-coriolis-fall",
         "body falling from rest at 45 deg N latitude with air friction",
         "scenario = \"coriolis-fall\"\n"
         "[coriolis]\n"
         "latitude_deg = 45.0\n"
         "eta = 0.1\n"
         "[initial]\n"
         "r0 = [0.0, 0.0, 1000.0]\n"
         "[output]\n"
         "file = \"fig-coriolis-fall.csv\"\n"},

        {"fig-coriolis-latitudes",
         "falling-body x-velocity at 30 deg N (companion run to fig-coriolis-fall)",
         "scenario = \"coriolis-fall\"\n"
         "[coriolis]\n"
         "latitude_deg = 30.0\n"
         "eta = 0.1\n"
         "[initial]\n"
         "r0 = [0.0, 0.0, 1000.0]\n"
         "[output]\n"
         "file = \"fig-coriolis-latitudes.csv\"\n"},

        {"fig-limit-velocity",
         "long damped fall reaching the stationary velocity (t_end = 20/eta)",
         "scenario = \"coriolis-fall\"\n"
         "[coriolis]\n"
         "latitude_deg = 45.0\n"
         "eta = 0.1\n"
         "[initial]\n"
         "r0 = [0.0, 0.0, 20000.0]\n"
         "[numerics]\n"
         "t_end = 200.0\n"
         "n_samples = 2000\n"
         "[output]\n"
         "file = \"fig-limit-velocity.csv\"\n"},

        {"fig-gradient-field",
         "electron in the in-plane field B = B0 (x, -y, 0): grad-B drift",
         "scenario = \"field-map\"\n"
         "[particle]\n"
         "mass = 9.1093837015e-31\n"
         "charge = -1.602176634e-19\n"
         "[fieldmap]\n"
         "kind = \"plane-hyperbolic\"\n"
         "B0 = 1.0e-3\n"
         "[initial]\n"
         "r0 = [1.0, 0.0, 0.0]\n"
         "v0 = [0.0, 1.0e5, 0.0]\n"
         "[numerics]\n"
         "delta = 5.5814400889303786e-10\n"  // period/64 at |B| = 1 mT
         "n_steps = 12800\n"
         "[output]\n"
         "file = \"fig-gradient-field.csv\"\n"},

        {"fig-relativistic",
         "crossed-field electron at v0 = 0.3c: gyration slows as gamma grows",
         "scenario = \"relativistic\"\n"
         "[particle]\n"
         "mass = 9.1093837015e-31\n"
         "charge = -1.602176634e-19\n"
         "[fields]\n"
         "B = [0.0, 0.0, 1.0e-3]\n"
         "E = [0.0, -15000.0, 0.0]\n"
         "[initial]\n"
         "v0 = [8.9937737e7, 0.0, 0.0]\n"
         "[output]\n"
         "file = \"fig-relativistic.csv\"\n"},

        {"fig-spectrum-solenoid",
         "emission spectrum of a mildly relativistic electron in a solenoid",
         "scenario = \"spectrum\"\n"
         "[radiation]\n"
         "q = [0.29552020666133955, 0.0, 0.955336489125606]\n"
         "beta0 = [0.05, 0.0, 0.03]\n"
         "Omega = 1.75882000838e8\n"
         "[output]\n"
         "file = \"fig-spectrum-solenoid.csv\"\n"},

        {"fig-lineshape",
         "fundamental line with and without an accelerating electric field",
         "scenario = \"lineshape\"\n"
         "[particle]\n"
         "mass = 9.1093837015e-31\n"
         "charge = -1.602176634e-19\n"
         "[fields]\n"
         "E = [50.0, 0.0, 0.0]\n"
         "[radiation]\n"
         "q = [0.29552020666133955, 0.0, 0.955336489125606]\n"
         "beta0 = [0.05, 0.0, 0.03]\n"
         "Omega = 1.75882000838e8\n"
         "[output]\n"
         "file = \"fig-lineshape.csv\"\n"},

        {"zassenhaus-order",
         "dyadic step study of the two split propagators for a quasi-parallel pair",
         "scenario = \"zassenhaus-order\"\n"
         "[pair]\n"
         "omega1 = [0.0, 0.0, 1.0]\n"
         "omega2 = [0.1, 0.0, 0.995]\n"
         "[output]\n"
         "file = \"zassenhaus-order.csv\"\n"},

        {"magnus-demo",
         "second-order ordered propagator on a rotating torque vs step size",
         "scenario = \"magnus-demo\"\n"
         "[output]\n"
         "file = \"magnus-demo.csv\"\n"},

        {"llg-demo",
         "magnetization precessing and aligning with the effective field",
         "scenario = \"llg-demo\"\n"
         "[output]\n"
         "file = \"llg-demo.csv\"\n"},

        {"radiation-reaction",
         "forced second-order velocity: both formulations side by side",
         "scenario = \"radiation-reaction\"\n"
         "[output]\n"
         "file = \"radiation-reaction.csv\"\n"},
    };
    return table;
}

const Preset* find_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name) return &p;
    return nullptr;
}

}  // namespace tprop::cli
