#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "effpose/kin/quaternion.hpp"

#include "json.hpp"

namespace effpose::kin {

/// Joint angles in radians, one per joint, each wrapped to [-pi, pi).
using JointVector = Eigen::VectorXd;

struct Pose {
  Quaternion rotation;
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Eigen::Vector3d transform(const Eigen::Vector3d& v) const {
    return rotation.rotate(v) + translation;
  }
};

struct JointSpec {
  std::string name;
  Eigen::Vector3d axis;    // unit rotation axis, in the parent link frame
  Eigen::Vector3d origin;  // offset from the parent joint frame, in the parent frame
};

struct LinkSpec {
  double mass = 0.0;                                 // kg
  Eigen::Vector3d com = Eigen::Vector3d::Zero();     // center of mass, in the link frame
};

struct FrameSpec {
  std::string name;
  int link = 0;  // index of the joint/link the frame is attached to
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();
  Quaternion rotation;
};

/// Serial-chain geometry plus per-link mass properties. Immutable after
/// construction; all member functions are const and thread-safe.
class RobotModel {
 public:
  RobotModel(std::vector<JointSpec> joints, std::vector<LinkSpec> links,
             std::vector<FrameSpec> frames,
             Eigen::Vector3d gravity = Eigen::Vector3d(0, 0, -9.81));

  /// The 4-joint workbench arm: yaw(z), pitch(y), pitch(y), gripper pitch(y),
  /// with IMU frames on links 2 and 3 and a grasp_point frame past the last
  /// joint.
  static RobotModel bench_arm();

  static RobotModel from_json(const nlohmann::json& j);
  static RobotModel load_file(const std::string& path);
  nlohmann::json to_json() const;

  int joint_count() const { return static_cast<int>(joints_.size()); }
  const std::vector<JointSpec>& joints() const { return joints_; }
  const std::vector<LinkSpec>& links() const { return links_; }
  const std::vector<FrameSpec>& frames() const { return frames_; }
  const Eigen::Vector3d& gravity() const { return gravity_; }

  bool has_frame(std::string_view name) const;
  /// Throws std::out_of_range for an unknown frame name.
  const FrameSpec& frame(std::string_view name) const;

  /// Pose of every link frame (after its joint rotation), base first.
  std::vector<Pose> link_poses(const JointVector& angles) const;

  Pose link_pose(const JointVector& angles, int link_index) const;

  /// Forward kinematics of a named frame; rotation canonicalized to w >= 0.
  Pose frame_pose(const JointVector& angles, std::string_view frame_name) const;

  /// Total gravitational potential energy at the given configuration.
  double potential_energy(const JointVector& angles) const;

  /// Generalized gravity g(theta) = dU/dtheta, one entry per joint, computed
  /// analytically from lever arms.
  Eigen::VectorXd gravity_torque(const JointVector& angles) const;

  /// Sum of joint offsets and the longest frame offset; an upper bound on how
  /// far any frame can move per radian of any joint.
  double reach() const;

 private:
  std::vector<JointSpec> joints_;
  std::vector<LinkSpec> links_;
  std::vector<FrameSpec> frames_;
  Eigen::Vector3d gravity_;
};

}  // namespace effpose::kin
