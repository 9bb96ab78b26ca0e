__all__ = [
    "Direction", "Exit", "RayPath", "enumerate_ray_paths", "ray_reflection_train", "ray_transmission_train", "path_energy",
]

from .raypath import Direction, Exit, RayPath, enumerate_ray_paths, ray_reflection_train, ray_transmission_train, path_energy
